"""PAC learner and its evaluation."""
