"""Tableau crystals, skew RSK, and Lusztig data for single-sink type A quivers."""
from .crystalgraph import (
    CrystalGraph,
    DatumFamily,
    TableauFamily,
    check_axioms,
    check_morphism,
    generate,
    highest_weight_graph,
    infinity_graph,
    semistandard_tableaux,
)
from .embedding import (
    EmbeddingContext,
    SplitTriple,
    c_minus,
    c_minus_barred,
    c_plus,
    embed,
    large_tableau,
    split_tableau,
    transition,
)
from .lusztig import (
    DatumSplit,
    LusztigDatum,
    OperatorScan,
    Quiver,
    adapted_word,
    apply_direct,
    apply_tensor,
    merge,
    root_order,
    split,
    weight_and_stats,
)
from .rsk import Biword, BiwordMatrix, biword_of, skew_rsk, skew_rsk_inverse, tau_transpose
from .tableaux import (
    BARRED,
    UNBARRED,
    Alphabet,
    SkewShape,
    Tableau,
    antinormalize,
    column_insert,
    rectify,
    sigma_complement,
)

__version__ = "0.1.0"
