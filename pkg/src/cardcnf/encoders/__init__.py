"""Cardinality constraint encoders.

This package provides:
- At-most-one encoders: direct, product, AMO with indicator, multipartite, clique
- At-most-k encoders: sequential counter, generalized product and its
  disjunctive variant, conjunctive and disjunctive grid compression
- A registry mapping short encoder names to emitters
"""

from cardcnf.encoders.amk import (
    BASE_DIRECT,
    BASE_SEQUENTIAL,
    emit_direct_amk,
    emit_disjunctive_generalized_product,
    emit_generalized_product,
    emit_sequential,
    encode_disjunctive_generalized_product,
    encode_generalized_product,
    encode_sequential,
    sequential_aux_count,
    sequential_clause_count,
)
from cardcnf.encoders.amo import (
    PRODUCT_BASE,
    emit_amo_prime,
    emit_direct,
    emit_product,
    encode_amo_prime,
    encode_direct,
    encode_product,
    product_aux_count,
    product_clause_count,
)
from cardcnf.encoders.base import check_bound, count_with, encode_with
from cardcnf.encoders.graph import (
    emit_clique,
    emit_multipartite,
    encode_clique,
    encode_multipartite,
)
from cardcnf.encoders.grid import (
    GridCompressionParams,
    dgc_clause_count,
    emit_disjunctive_grid_compression,
    emit_grid_compression,
    encode_disjunctive_grid_compression,
    encode_grid_compression,
    grid_search_params,
    hall_params,
)
from cardcnf.encoders.layout import MultipartiteShape, clique_size
from cardcnf.encoders.registry import (
    EncoderInfo,
    EncoderParam,
    EncoderRegistry,
    build_encoding,
    count_encoding,
    emitter_for,
    get_registry,
)

__all__ = [
    # AMO
    "PRODUCT_BASE",
    "emit_direct",
    "emit_product",
    "emit_amo_prime",
    "encode_direct",
    "encode_product",
    "encode_amo_prime",
    "product_clause_count",
    "product_aux_count",
    "emit_multipartite",
    "emit_clique",
    "encode_multipartite",
    "encode_clique",
    "MultipartiteShape",
    "clique_size",
    # AMK
    "BASE_SEQUENTIAL",
    "BASE_DIRECT",
    "emit_sequential",
    "emit_direct_amk",
    "emit_generalized_product",
    "emit_disjunctive_generalized_product",
    "encode_sequential",
    "encode_generalized_product",
    "encode_disjunctive_generalized_product",
    "sequential_clause_count",
    "sequential_aux_count",
    "GridCompressionParams",
    "hall_params",
    "grid_search_params",
    "dgc_clause_count",
    "emit_grid_compression",
    "emit_disjunctive_grid_compression",
    "encode_grid_compression",
    "encode_disjunctive_grid_compression",
    # Plumbing
    "check_bound",
    "encode_with",
    "count_with",
    "EncoderParam",
    "EncoderInfo",
    "EncoderRegistry",
    "get_registry",
    "build_encoding",
    "count_encoding",
    "emitter_for",
]
