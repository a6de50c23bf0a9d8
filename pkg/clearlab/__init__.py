# Make clearlab a Python package
