package uas;

public class Course {
    private String code;
    private String title;
    private int credits;
    private int capacity;
    private int enrolled;
    private String semester;
    private String lecturer;
    private String room;
    private String day;
    private int hour;
    private String notes;

    public void addSession(int slot) {
        this.hour = slot;
    }

    public String describe() {
        return code + " " + title;
    }
}

class CourseCatalog {
    private java.util.List entries;
    private int revision;
    private String campus;
    private int year;
    private String term;
    private boolean sealed;

    public void add(Course course) {
        revision = revision + 1;
    }

    public Course find(String code) {
        return null;
    }
}
