package fix.misc;

public class Complexity {
    public int busy(int n) {
        int acc = 0;
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0 && i > 2) {
                acc += i;
            }
        }
        while (acc > 100) {
            acc -= 7;
        }
        switch (n) {
        case 0:
            acc = 1;
            break;
        case 1:
            acc = 2;
            break;
        default:
            break;
        }
        try {
            acc = acc / n;
        } catch (ArithmeticException e) {
            acc = n > 0 ? 1 : 0;
        }
        return acc;
    }
}
