package uas;

import uas.model.Student;

public class LoginService {
    private int sessions;
    private int attempts;
    private int lockoutLimit;
    private long tokenSeed;
    private String realm;
    private boolean strictMode;

    public LoginService(String realm) {
        this.realm = realm;
        this.lockoutLimit = 3;
    }

    public boolean login(String user, String pass) {
        attempts = attempts + 1;
        if (attempts > lockoutLimit) {
            return false;
        }
        sessions = sessions + 1;
        return true;
    }

    public void logout(String user) {
        sessions = sessions - 1;
    }
}
