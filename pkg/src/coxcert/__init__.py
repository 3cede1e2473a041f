"""coxcert: exact certification of reflection-group embeddings.

Given a diagram on n vertices (edges mark the NON-commuting generator
pairs), the package builds the associated one-parameter family M_d of
symmetric matrices, computes exact thresholds epsilon and D, picks a unit
alpha in Z[sqrt m] with alpha >= max(1/epsilon, D), and certifies the
reflection representation at alpha: group relations, integrality,
preservation of an indefinite form, compactness of the Galois-conjugate
form, Zariski density via bracket closure, and a finite faithfulness
probe.  All verdicts come from exact arithmetic over Q and Q(sqrt m);
floats appear only in reports.
"""

from __future__ import annotations

from .cyclecheck import (
    SPECTRUM_TOLERANCE,
    CycleReport,
    SpectrumPrediction,
    circulant_identity_ok,
    predicted_spectrum,
    verify_cycle_example,
)
from .diagram import (
    CoxeterDiagram,
    cycle_complement,
    is_connected,
    parse_diagram,
    serialize_diagram,
)
from .exactcore import (
    Interval,
    Matrix,
    Poly,
    QuadElem,
    Rat,
    Signature,
    quad_sign,
)
from .gram import (
    GramPencil,
    ThresholdReport,
    d_threshold,
    epsilon_threshold,
    evaluate_pencil,
    gram_pencil,
    minor_polynomials,
    stable_signature,
    threshold_report,
)
from .liealg import (
    BasisReport,
    DensityCertificate,
    PlaneReport,
    bracket_closure_density,
    full_basis_check,
    hyperbolic_plane_check,
    orthocomplement_basis,
    planar_generator,
)
from .units import (
    GaloisReport,
    PellSolution,
    UnitValue,
    choose_unit,
    fundamental_pell,
    galois_pair_check,
)
from .vinberg import (
    CompactnessReport,
    EmbeddingCertificate,
    GeneratorSet,
    RelationReport,
    build_embedding_certificate,
    compact_conjugate_check,
    expected_trace,
    generators_integral,
    reflection_generators,
    trace_polynomial,
    verify_relations,
)
from .words import (
    FaithfulnessReport,
    append_letter,
    enumerate_by_length,
    even_filter,
    faithfulness_probe,
    normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "BasisReport",
    "CompactnessReport",
    "CoxeterDiagram",
    "CycleReport",
    "DensityCertificate",
    "EmbeddingCertificate",
    "FaithfulnessReport",
    "GaloisReport",
    "GeneratorSet",
    "GramPencil",
    "Interval",
    "Matrix",
    "PellSolution",
    "PlaneReport",
    "Poly",
    "QuadElem",
    "Rat",
    "RelationReport",
    "SPECTRUM_TOLERANCE",
    "Signature",
    "SpectrumPrediction",
    "ThresholdReport",
    "UnitValue",
    "append_letter",
    "bracket_closure_density",
    "build_embedding_certificate",
    "choose_unit",
    "circulant_identity_ok",
    "compact_conjugate_check",
    "cycle_complement",
    "d_threshold",
    "enumerate_by_length",
    "epsilon_threshold",
    "evaluate_pencil",
    "even_filter",
    "expected_trace",
    "faithfulness_probe",
    "full_basis_check",
    "fundamental_pell",
    "galois_pair_check",
    "generators_integral",
    "gram_pencil",
    "hyperbolic_plane_check",
    "is_connected",
    "minor_polynomials",
    "normal_form",
    "orthocomplement_basis",
    "parse_diagram",
    "planar_generator",
    "predicted_spectrum",
    "quad_sign",
    "reflection_generators",
    "serialize_diagram",
    "stable_signature",
    "threshold_report",
    "trace_polynomial",
    "verify_cycle_example",
    "verify_relations",
    "__version__",
]
