package fix.misc;

public class Foo {
}
