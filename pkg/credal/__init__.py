"""Decision making with sets of priors: geometry, criteria, rectangular hulls, audits."""
