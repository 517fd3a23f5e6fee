"""Encoder registry.

Maps the short encoder names used by the CLI and the bench to emitters,
their constraint kind and the parameters they accept.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from cardcnf.cnf.encoding import Constraint, ConstraintKind, Encoding, EncodingStats
from cardcnf.cnf.formula import ClauseSink, Literal
from cardcnf.encoders.amk import (
    BASE_DIRECT,
    BASE_SEQUENTIAL,
    emit_disjunctive_generalized_product,
    emit_generalized_product,
    emit_sequential,
)
from cardcnf.encoders.amo import PRODUCT_BASE, emit_amo_prime, emit_direct, emit_product
from cardcnf.encoders.base import Emitter, check_bound, count_with, encode_with
from cardcnf.encoders.graph import emit_clique, emit_multipartite
from cardcnf.encoders.grid import emit_disjunctive_grid_compression, emit_grid_compression
from cardcnf.encoders.layout import product_grid
from cardcnf.errors import EncodingError
from cardcnf.utils.config import get_config

logger = logging.getLogger(__name__)

# Builds an emitter from the bound k and the coerced params.
EmitterFactory = Callable[[int, dict[str, Any]], Emitter]


@dataclass(frozen=True)
class EncoderParam:
    """A parameter accepted by an encoder.

    Attributes:
        name: Parameter key (as in `--params key=value`)
        type: Conversion applied to string values
        description: Human-readable description
        choices: Allowed values, if restricted
    """

    name: str
    type: type
    description: str = ""
    choices: tuple[str, ...] = ()


@dataclass(frozen=True)
class EncoderInfo:
    """A registered encoder.

    Attributes:
        name: Registry name
        kind: Constraint kind it encodes (AMO encoders also serve AMK 1)
        description: Human-readable description
        factory: Emitter factory
        params: Accepted parameters
    """

    name: str
    kind: ConstraintKind
    description: str
    factory: EmitterFactory
    params: tuple[EncoderParam, ...] = field(default_factory=tuple)

    def param(self, name: str) -> EncoderParam | None:
        return next((p for p in self.params if p.name == name), None)

    def coerce_params(self, raw: dict[str, Any]) -> dict[str, Any]:
        """Convert raw key/value params to their declared types.

        Raises:
            EncodingError: On unknown keys, unconvertible values or values
                outside the declared choices.
        """
        coerced: dict[str, Any] = {}
        for key, value in raw.items():
            spec = self.param(key)
            if spec is None:
                known = ", ".join(p.name for p in self.params) or "none"
                raise EncodingError(
                    f"unknown param '{key}' for encoder {self.name} (accepts: {known})"
                )
            try:
                converted = spec.type(value)
            except (TypeError, ValueError) as e:
                raise EncodingError(
                    f"param {key}={value!r} is not a valid {spec.type.__name__}"
                ) from e
            if spec.choices and converted not in spec.choices:
                raise EncodingError(f"param {key} must be one of {', '.join(spec.choices)}")
            coerced[key] = converted
        return coerced


class EncoderRegistry:
    """Registry of encoders by name."""

    def __init__(self) -> None:
        self._encoders: dict[str, EncoderInfo] = {}

    def register(self, info: EncoderInfo) -> None:
        self._encoders[info.name] = info

    def get(self, name: str) -> EncoderInfo | None:
        return self._encoders.get(name)

    def require(self, name: str) -> EncoderInfo:
        """Get an encoder by name.

        Raises:
            EncodingError: If no encoder has that name.
        """
        info = self._encoders.get(name)
        if info is None:
            available = ", ".join(self.list_names())
            raise EncodingError(f"unknown encoder '{name}' (available: {available})")
        return info

    def list_names(self) -> list[str]:
        return list(self._encoders)

    def names_for(self, kind: ConstraintKind) -> list[str]:
        """Names of encoders whose native constraint is `kind`."""
        return [name for name, info in self._encoders.items() if info.kind is kind]


def _amo(emit: Callable[..., Any]) -> EmitterFactory:
    return lambda k, params: lambda sink, xs: emit(sink, xs)


def _product_factory(k: int, params: dict[str, Any]) -> Emitter:
    def emit(sink: ClauseSink, xs: Sequence[Literal]) -> dict[str, Any]:
        emit_product(sink, xs)
        return {"p": product_grid(len(xs)).width} if len(xs) > PRODUCT_BASE else {}

    return emit


def _amo_prime_factory(k: int, params: dict[str, Any]) -> Emitter:
    # The indicator is the last input.
    return lambda sink, xs: emit_amo_prime(sink, xs[:-1], xs[-1])


def _sequential_factory(k: int, params: dict[str, Any]) -> Emitter:
    return lambda sink, xs: emit_sequential(sink, xs, k)


def _gp_factory(k: int, params: dict[str, Any]) -> Emitter:
    base = params.get("base", BASE_SEQUENTIAL)
    return lambda sink, xs: emit_generalized_product(sink, xs, k, base)


def _dgp_factory(k: int, params: dict[str, Any]) -> Emitter:
    return lambda sink, xs: emit_disjunctive_generalized_product(sink, xs, k)


def _gc_factory(k: int, params: dict[str, Any]) -> Emitter:
    retries = params.get("retries", get_config().hall_retries)
    return lambda sink, xs: emit_grid_compression(
        sink, xs, k, params.get("m"), params.get("ell"), params.get("seed", 0), retries
    )


def _dgc_factory(k: int, params: dict[str, Any]) -> Emitter:
    c = params.get("c", get_config().cover_free_constant)
    return lambda sink, xs: emit_disjunctive_grid_compression(
        sink, xs, k, m=params.get("m"), ell=params.get("ell"), c=c
    )


_GRID_PARAMS = (
    EncoderParam("m", int, "column count of the input grid"),
    EncoderParam("ell", int, "column count of the compressed grid"),
)


def _register_builtin(registry: EncoderRegistry) -> None:
    amo = ConstraintKind.AMO
    amk = ConstraintKind.AMK
    registry.register(EncoderInfo("direct", amo, "pairwise clauses", _amo(emit_direct)))
    registry.register(EncoderInfo("product", amo, "recursive grid (product)", _product_factory))
    registry.register(
        EncoderInfo(
            "amo-prime",
            ConstraintKind.AMO_INDICATOR,
            "product AMO plus an indicator implied by every input",
            _amo_prime_factory,
        )
    )
    registry.register(
        EncoderInfo(
            "multipartite", amo, "edges of a complete multipartite graph", _amo(emit_multipartite)
        )
    )
    registry.register(EncoderInfo("clique", amo, "edges of a clique", _amo(emit_clique)))
    registry.register(EncoderInfo("seqcounter", amk, "sequential counter", _sequential_factory))
    registry.register(
        EncoderInfo(
            "gp",
            amk,
            "generalized product",
            _gp_factory,
            (EncoderParam("base", str, "base case encoding", (BASE_SEQUENTIAL, BASE_DIRECT)),),
        )
    )
    registry.register(EncoderInfo("dgp", amk, "disjunctive generalized product", _dgp_factory))
    registry.register(
        EncoderInfo(
            "gc",
            amk,
            "conjunctive grid compression",
            _gc_factory,
            (
                *_GRID_PARAMS,
                EncoderParam("seed", int, "Hall family sampling seed"),
                EncoderParam("retries", int, "Hall samples per ell before doubling it"),
            ),
        )
    )
    registry.register(
        EncoderInfo(
            "dgc",
            amk,
            "disjunctive grid compression",
            _dgc_factory,
            (*_GRID_PARAMS, EncoderParam("c", float, "Reed-Solomon field size constant (k >= 3)")),
        )
    )


def _resolve(
    name: str,
    n: int,
    k: int | None,
    params: dict[str, Any] | None,
) -> tuple[EncoderInfo, Constraint, int, Emitter]:
    info = get_registry().require(name)
    coerced = info.coerce_params(params or {})
    if n < 1:
        raise EncodingError(f"n must be positive, got {n}")

    if info.kind is ConstraintKind.AMK:
        bound = 1 if k is None else k
        check_bound(n, bound)
        constraint = Constraint.amk(bound)
    else:
        if k is not None and k != 1:
            raise EncodingError(f"encoder {name} encodes at-most-one, got k={k}")
        bound = 1
        constraint = (
            Constraint.amo_indicator()
            if info.kind is ConstraintKind.AMO_INDICATOR
            else Constraint.amo()
        )
    num_inputs = n + 1 if info.kind is ConstraintKind.AMO_INDICATOR else n
    return info, constraint, num_inputs, info.factory(bound, coerced)


def emitter_for(name: str, k: int, params: dict[str, Any] | None = None) -> Emitter:
    """Emitter of an at-most-k constraint for embedding into a larger formula.

    AMO encoders serve k = 1 only; the indicator variant is not embeddable.

    Raises:
        EncodingError: On unknown encoder, bad params or a kind mismatch.
    """
    info = get_registry().require(name)
    coerced = info.coerce_params(params or {})
    if k < 1:
        raise EncodingError(f"k must be positive, got {k}")
    if info.kind is ConstraintKind.AMO_INDICATOR:
        raise EncodingError(f"encoder {name} needs an indicator input")
    if info.kind is ConstraintKind.AMO and k != 1:
        raise EncodingError(f"encoder {name} encodes at-most-one, got k={k}")
    return info.factory(k, coerced)


def build_encoding(
    name: str,
    n: int,
    k: int | None = None,
    params: dict[str, Any] | None = None,
) -> Encoding:
    """Build an encoding over inputs 1..n by encoder name.

    amo-prime gets n + 1 inputs, the last being the indicator.

    Args:
        name: Registry name.
        n: Number of constrained inputs.
        k: Bound for AMK encoders (default 1); must be 1 or None for AMO encoders.
        params: Raw encoder parameters, converted per the encoder's declaration.

    Raises:
        EncodingError: On unknown encoder, bad params or k out of range.
    """
    info, constraint, num_inputs, emit = _resolve(name, n, k, params)
    logger.info(f"Encoding {name} n={n} k={constraint.k}")
    return encode_with(info.name, constraint, range(1, num_inputs + 1), emit)


def count_encoding(
    name: str,
    n: int,
    k: int | None = None,
    params: dict[str, Any] | None = None,
) -> EncodingStats:
    """Count the clauses and auxiliaries of an encoding without storing them.

    Runs the same emission code as build_encoding.
    """
    info, constraint, num_inputs, emit = _resolve(name, n, k, params)
    return count_with(info.name, constraint, num_inputs, emit)


_registry: EncoderRegistry | None = None


def get_registry() -> EncoderRegistry:
    """Get or create the singleton EncoderRegistry instance."""
    global _registry
    if _registry is None:
        _registry = EncoderRegistry()
        _register_builtin(_registry)
    return _registry
