package fix.coupling;

public class Helper {
    public static int calls;

    public static void assist() {
        calls++;
    }
}
