# Make 'survey' a Python package
