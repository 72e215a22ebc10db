# ABOUTME: Tests package for Jarvis.
