"""Lossless gradient-predictive image codec and benchmark harness."""
