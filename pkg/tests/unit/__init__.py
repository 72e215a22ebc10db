# ABOUTME: Unit tests package.
