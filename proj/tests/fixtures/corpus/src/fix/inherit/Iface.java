package fix.inherit;

public interface Iface {
    void touch();
}
