"""JSON Schema documents for the machine-readable outputs."""

_COEFF = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+/\d+$"}]}

SERIES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["trunc", "coeffs"],
    "properties": {
        "trunc": {"type": "integer", "minimum": 0},
        "coeffs": {"type": "array", "items": _COEFF},
    },
}

BIVARIATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["trunc", "coeffs"],
    "properties": {
        "trunc": {"type": "integer", "minimum": 0},
        "coeffs": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [{"type": "integer"}, {"type": "integer"}, _COEFF],
                      "minItems": 3, "maxItems": 3},
        },
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["target", "params", "status", "first_violation", "details"],
    "properties": {
        "target": {"type": "string"},
        "params": {"type": "object"},
        "status": {"enum": ["verified", "violated", "evidence-only"]},
        "first_violation": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["L", "n", "lhs", "rhs"],
                    "properties": {
                        "L": {"type": ["integer", "null"]},
                        "n": {"type": ["integer", "null"]},
                        "lhs": {"type": "string"},
                        "rhs": {"type": "string"},
                    },
                },
            ]
        },
        "details": {"type": "object"},
        "elapsed": {"type": "number", "minimum": 0},
    },
}
