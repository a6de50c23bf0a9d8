# Make 'reporting' a Python package
