package uas;

// class Phantom { void ghost() {} } -- legacy helper, kept for reference
public class TextUtil {
    private static final char PAD_CHAR = ' ';
    private static final int MAX_LEN = 240;
    private static final String ELLIPSIS = "...";
    private String localeName;
    private int cacheHits;
    private int cacheMisses;
    private java.util.Map upperMap;
    private java.util.Map lowerMap;
    private String separator = "; aspect inside a string is just text";

    /*
     * aspect Spooky { pointcut p(): call(* *(..)); }
     * The block above documents syntax; it must never be parsed.
     */
    public String trim(String text) {
        cacheHits = cacheHits + 1;
        return text;
    }

    public String pad(String text, int width) {
        cacheMisses = cacheMisses + 1;
        return text;
    }

    public boolean blank(String text) {
        return text == null;
    }
}
