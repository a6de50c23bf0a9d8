# Make 'classify' a Python package
