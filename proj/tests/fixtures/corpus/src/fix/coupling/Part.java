package fix.coupling;

public class Part {
    public int id;

    public Part(int id) {
        this.id = id;
    }

    public int tag() {
        return id;
    }
}
