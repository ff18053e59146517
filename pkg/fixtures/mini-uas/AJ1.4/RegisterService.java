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

    public void confirm(Registration registration) {
        this.open = true;
    }
}
