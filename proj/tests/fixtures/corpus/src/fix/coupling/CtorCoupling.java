package fix.coupling;

public class CtorCoupling {
    public int make() {
        Part p = new Part(5);
        return p.tag();
    }
}
