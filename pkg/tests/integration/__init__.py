# ABOUTME: Integration tests package.
