"""JSON schemas of the ``--format json`` output of every CLI subcommand."""

from __future__ import annotations

_num = {"type": "number"}
_num_or_null = {"type": ["number", "null"]}
_nums = {"type": "array", "items": _num}
_ints = {"type": "array", "items": {"type": "integer"}}


def _obj(props: dict, required: list[str] | None = None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
    }


VERDICT = _obj(
    {
        "kind": {"enum": ["Included", "NotIncluded", "Indeterminate"]},
        "margin": _num_or_null,
        "witness_t": _num_or_null,
        "witness_theta": _num_or_null,
        "tol": _num,
        "method": {"type": "string"},
        "details": {"type": "object"},
    }
)

CONJECTURE_REPORT = _obj(
    {
        "passed": {"type": "boolean"},
        "n": {"type": "integer"},
        "pattern": _ints,
        "worst_margin": _num,
        "worst_class": {"type": ["array", "null"], "items": {"type": "integer"}},
        "classes_checked": {"type": "integer"},
        "tol": _num,
        "weights": _nums,
    }
)

SCHEMAS: dict[str, dict] = {
    "charpoly": _obj({"weights": _nums, "n": {"type": "integer"}, "f": _nums, "alpha": _num}),
    "radius": _obj({"weights": _nums, "radius": _num}),
    "support": _obj({"weights": _nums, "t": _num, "z": _num, "lambda1": _num}),
    "include": _obj({"A": _nums, "B": _nums, "verdict": VERDICT}),
    "boundary": _obj(
        {
            "symmetry_order": {"type": ["integer", "null"]},
            "disk": {"type": "boolean"},
            "radius": _num_or_null,
            "points": {"type": "array", "items": {"type": "array", "items": _num,
                                                  "minItems": 3, "maxItems": 3}},
            "out": {"type": "string"},
            "rows": {"type": "integer"},
        },
        required=["symmetry_order", "disk", "radius"],
    ),
    "search": _obj(
        {
            "weights": _nums,
            "status": {"enum": ["Optimum", "NoTotalOptimum"]},
            "direction": {"enum": ["max", "min"]},
            "best": {"type": ["array", "null"], "items": {"type": "integer"}},
            "ties": {"type": "array", "items": _ints},
            "antichain": {"type": "array", "items": _ints},
            "margin": _num,
            "tol": _num,
            "evidence": {"type": "array", "items": VERDICT},
        }
    ),
    "verify-conjecture": _obj(
        {
            "passed": {"type": "boolean"},
            "n": {"type": "integer"},
            "trials": {"type": "array", "items": CONJECTURE_REPORT},
        }
    ),
    "extremal": _obj(
        {
            "kind": {"enum": ["ngon", "path", "frobenius", "double"]},
            "weights": _nums,
            "objective": _num_or_null,
            "eigvec": {"type": ["array", "null"], "items": _num},
            "verdict": {"oneOf": [VERDICT, {"type": "null"}]},
            "mu": _num_or_null,
            "x0": _num_or_null,
            "gap": _num_or_null,
        },
        required=["kind", "weights"],
    ),
    "families": _obj(
        {
            "classes": {
                "type": "array",
                "items": _obj(
                    {
                        "index": {"type": "integer"},
                        "rep": _ints,
                        "family": {"type": "string"},
                        "cyclic_sum": _num,
                    },
                    required=["index", "rep", "family"],
                ),
                "minItems": 60,
                "maxItems": 60,
            },
            "weights": _nums,
            "identities_ok": {"type": "boolean"},
            "bounds_ok": {"type": "boolean"},
            "X": {"type": "object"},
            "X0": _num,
            "bound": _num,
        },
        required=["classes"],
    ),
    "counterexample": _obj(
        {
            "squares": _nums,
            "polynomials": {
                "type": "array",
                "items": _obj({"arrangement": _ints, "f": _nums, "alpha": _num, "top_root": _num}),
                "minItems": 2,
                "maxItems": 2,
            },
            "verdict": VERDICT,
        }
    ),
}
