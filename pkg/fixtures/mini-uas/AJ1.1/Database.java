package uas;

public class Database {
    private String url;
    private String user;
    private String secret;
    private int pool;
    private int timeout;
    private int retries;
    private String schema;
    private String dialect;
    private java.util.Map cache;
    private int cacheSize;
    private boolean readOnly;
    private boolean trace;
    private int version;

    public Database(String url) {
        this.url = url;
        this.pool = 4;
    }

    public void store(String key, String value) {
        cacheSize = cacheSize + 1;
    }

    public String fetch(String key) {
        return schema;
    }

    public boolean validate(String key) {
        return readOnly;
    }
}
