"""Domain errors, each carrying a short machine-readable code.

The CLI prints ``code: message`` on stderr and exits 1 for any of these;
library users can branch on ``exc.code``.  Codes in use include
invalid-tuple, non-integer-genus, bound-exceeded, index-out-of-range,
invalid-result, invalid-origami, degenerate-leading-coefficient,
pole-at-half, ambiguous, no-such-lift, path-tracking-failure,
product-constraint-violation, pole-at-0-or-1, tolerance-unreachable,
expression-mismatch, negative-discriminant, ambiguous-assignment and
invalid-parameter (malformed arguments outside any deeper category).
"""


class DessinryError(Exception):
    def __init__(self, code, message):
        super().__init__("%s: %s" % (code, message))
        self.code = code
        self.message = message
