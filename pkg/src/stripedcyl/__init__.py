"""Word problems, normal forms and linear representations for striped-cylinder cobordisms."""

from .cyclic import (
    A,
    AtlWord,
    B,
    Cyc,
    CyclicWord,
    Degen,
    FaceD,
    LoopId,
    MonotoneMap,
    SimplicialWord,
    SqrtCyc,
    SqrtCyclicWord,
    T,
    atl_to_cyla,
    check_cyl0_extension,
    cyl0_extension_report,
    delta_double,
    lambda_to_cyl,
    monotone_semantics,
    sqrt_double,
    sqrtlambda_to_cyl,
)
from .diagram import (
    AffineDiagram,
    Category,
    InvariantTuple,
    compose_diagrams,
    eq_in,
    evaluate,
    generator_diagram,
    identity_diagram,
    invariants,
)
from .errors import *  # noqa: F401,F403
from .grammar import parse_word
from .linear import BarRep, DeltaPoly, Matrix, TLElement, gen_matrix, tl_compose, tl_evaluate, tl_from_word, word_matrix
from .normal_form import (
    Bracelets,
    Empty,
    NormalForm,
    TwistPower,
    format_normal_form,
    normal_form_of,
    normalize,
    reconstruct_caps,
    synthesize_type1,
    synthesize_type3,
)
from .relations import RelationInstance, check_relation, instances
from .render import render_svg
from .words import (
    Birth,
    Death,
    Generator,
    GeneratorWord,
    Id,
    Kind,
    ObjectLabel,
    Tw,
    TwInv,
    concat,
    eliminate_inverses,
    format_word,
    generator_signature,
    power,
    then,
    word,
)

__version__ = "0.1.0"
