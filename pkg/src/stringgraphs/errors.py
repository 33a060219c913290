"""Exception types shared across the package.

InputError covers malformed files, configs, and CLI arguments (exit code 2);
InvariantError marks a violated structural guarantee — a certificate that
failed re-verification — and is never expected on healthy code paths
(exit code 1).
"""


class InputError(ValueError):
    pass


class InvariantError(RuntimeError):
    pass
