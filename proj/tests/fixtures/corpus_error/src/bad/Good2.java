package bad;

public class Good2 {
    int n;

    public int bump() {
        n++;
        return n;
    }
}
