package fix.inherit;

public class Imp3 implements Iface {
    public void touch() {}
}
