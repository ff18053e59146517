package uas;

public class FaultReport {
    private String code;
    private String message;
    private String raisedOn;
    private int severity;

    public String summary() {
        return code + message;
    }
}
