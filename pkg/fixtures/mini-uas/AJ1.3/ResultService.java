package uas;

public class ResultService {
    private java.util.Map results;
    private int published;
    private String term;
    private String scale;
    private boolean moderation;
    private String chair;
    private String postedOn;
    private String visibleFrom;
    private int appeals;
    private boolean sealed;

    public void publish(int courseId) {
        published = published + 1;
    }

    public int lookup(String studentId) {
        return published;
    }

    public void archive(int year) {
        this.sealed = true;
    }
}

class GradeBook {
    private java.util.Map entries;
    private Course course;
    private int maxScore;
    private int minScore;
    private double curve;
    private boolean locked;
    private String updatedOn;
    private int revision;

    public pointcut resultUpdate(): call(void uas.GradeBook.update(int));

    public void update(int score) {
        revision = revision + 1;
    }

    public double average() {
        return curve;
    }
}
