package uas;

import uas.model.Student;

public class RegisterService {
    private java.util.List queue;
    private int capacity;
    private int drafts;
    private int confirmations;
    private String deadline;
    private String term;
    private java.util.Map feeTable;
    private String policy;
    private boolean open;

    public void register(Student student, Course course) {
        confirmations = confirmations + 1;
    }

    public boolean saveDraft(Registration registration) {
        drafts = drafts + 1;
        return open;
    }

    public void confirm(Registration registration) {
        this.open = true;
    }
}
