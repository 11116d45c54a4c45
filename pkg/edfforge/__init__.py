class EdfForgeError(ValueError):
    ...
