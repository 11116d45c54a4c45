# Unit tests for edfforge
