# ABOUTME: qgauss package root - Gaussian generating functionals on free easy quantum groups.
