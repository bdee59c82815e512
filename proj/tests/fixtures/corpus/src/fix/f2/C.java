package fix.f2;

public class C extends B {
}
