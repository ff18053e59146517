package uas;

public class AccessPolicy {
    private java.util.List rules;
    private boolean defaultAllow;
    private String owner;
    private String scope;
    private String createdOn;
    private int revision;

    public boolean permits(String action) {
        return defaultAllow;
    }

    public void deny(String action) {
        revision = revision + 1;
    }
}
