# Validation tests package
