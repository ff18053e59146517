package uas;

public class Notification {
    private String recipient;
    private String subject;
    private String body;
    private String sentOn;
    private String channel;

    public void send() {
        this.sentOn = channel;
    }

    public String render() {
        return subject + body;
    }
}
