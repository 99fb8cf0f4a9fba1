event = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}


def _kind(name, properties=None, required=()):
    return {
        "type": "object",
        "required": ["kind"] + list(required),
        "additionalProperties": False,
        "properties": dict({"kind": {"const": name}}, **(properties or {})),
    }


observer_schemas = [
    _kind("inertial", {
        "v": {"type": "number"},
        "base": {"$ref": "#/definitions/event"},
    }),
    _kind("rindler", {"a": {"type": "number"}}, ["a"]),
    _kind("perturbed_inertial", {
        "amplitude": {"type": "number"},
        "omega": {"type": "number"},
    }),
    _kind("oscillation", {
        "amplitude": {"type": "number"},
        "omega": {"type": "number"},
    }),
    _kind("piecewise_linear", {
        "vertices": {
            "type": "array",
            "minItems": 2,
            "items": {"$ref": "#/definitions/event"},
        },
    }, ["vertices"]),
    _kind("sum", {
        "terms": {"type": "array", "minItems": 2, "items": {"type": "string"}},
    }, ["terms"]),
    _kind("boosted", {
        "observer": {"type": "string"},
        "v": {"type": "number"},
    }, ["observer", "v"]),
    _kind("translated", {
        "observer": {"type": "string"},
        "offset": {"$ref": "#/definitions/event"},
    }, ["observer", "offset"]),
]

map_schemas = [
    _kind("mw", {"observer": {"type": "string"}}, ["observer"]),
    _kind("radar_inverse", {"observer": {"type": "string"}}, ["observer"]),
    _kind("conj", {"map": {"type": "string"}}, ["map"]),
    _kind("post_conj", {"map": {"type": "string"}}, ["map"]),
    _kind("sum", {
        "terms": {"type": "array", "minItems": 2, "items": {"type": "string"}},
    }, ["terms"]),
    _kind("affine_lorentz", {
        "v": {"type": "number"},
        "scale": {"type": "number", "exclusiveMinimum": 0},
        "offset": {"$ref": "#/definitions/event"},
    }),
    _kind("linear", {
        "matrix": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {"$ref": "#/definitions/event"},
        },
    }, ["matrix"]),
    _kind("power", {"n": {"type": "integer", "minimum": 0}}, ["n"]),
    _kind("identity"),
    _kind("wave_cauchy", {
        "observer": {"type": "string"},
        "sign": {"enum": [1, -1]},
    }, ["observer"]),
]

scenario_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "definitions": {
        "event": event,
        "observer": {"oneOf": observer_schemas},
        "map": {"oneOf": map_schemas},
    },
    "type": "object",
    "required": ["grid"],
    "additionalProperties": False,
    "properties": {
        "c": {"type": "number", "exclusiveMinimum": 0},
        "seed": {"type": "integer", "minimum": 0},
        "observers": {
            "type": "object",
            "additionalProperties": {"$ref": "#/definitions/observer"},
        },
        "maps": {
            "type": "object",
            "additionalProperties": {"$ref": "#/definitions/map"},
        },
        "grid": {
            "type": "object",
            "required": ["t_min", "t_max", "x_min", "x_max"],
            "additionalProperties": False,
            "properties": {
                "t_min": {"type": "number"},
                "t_max": {"type": "number"},
                "x_min": {"type": "number"},
                "x_max": {"type": "number"},
                "n_t": {"type": "integer", "minimum": 3},
                "n_x": {"type": "integer", "minimum": 3},
                "h": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "tolerances": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "null_band": {"type": "number", "exclusiveMinimum": 0},
                "root_tol": {"type": "number", "exclusiveMinimum": 0},
                "quad_tol": {"type": "number", "exclusiveMinimum": 0},
                "fd_step": {"type": "number", "exclusiveMinimum": 0},
                "residual_max": {"type": "number", "minimum": 0},
            },
        },
    },
}
