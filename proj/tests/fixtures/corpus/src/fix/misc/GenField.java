package fix.misc;

import java.util.List;

public class GenField {
    List<Foo> items;

    public int size() {
        return items.size();
    }
}
