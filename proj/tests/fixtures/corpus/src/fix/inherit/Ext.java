package fix.inherit;

import java.util.ArrayList;

public class Ext extends ArrayList {
    public int twice() {
        return size() * 2;
    }
}
