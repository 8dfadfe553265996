import pytest

from pbwcheck.cli import parse_text
from pbwcheck.freealg import Alphabet, Field, FreeAlgebra

# presentations shared by several test modules
POLY3 = '''
gens x y w
rel x*y - y*x; x*w - w*x; y*w - w*y
'''

EX53 = '''
gens x y z
rel y^2; x*y*z
'''

# Ext^3 is nonzero in every degree, so no bound certifies the complexity
EX52 = '''
option central t
gens w x y z
rel y*z; z*x - x*z; z*w
'''

FREE = '''
gens x y
'''

SL2 = '''
field Q
gens e f h
def e*f - f*e - h; h*e - e*h - 2*e; h*f - f*h + 2*f
'''

SL2_PERTURBED = '''
gens e f h
def e*f - f*e - h; h*e - e*h - 2*e; h*f - f*h + 2*e
'''

WEYL = '''
gens x y
def x*y - y*x - 1
'''

SECTION4 = '''
gens x y w
def x^2*y - w; y^3 - w
'''

# Artin-Schelter regular of dimension 3 with cubic relations
CUBIC3 = '''
gens x y
rel x^2*y - y*x^2; x*y^2 - y^2*x
'''

# enveloping algebra of the graded Lie algebra spanned by x, y, [x,y], [x,[x,y]]
AS4 = '''
gens x y
rel 2*y*x*y - y^2*x - x*y^2; x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3
'''

CUBIC_DEF = '''
gens x y
def x^2*y - y*x^2 + y; x*y^2 - y^2*x - x
'''

# the relation overlaps itself in degree 9
SELF_OVERLAP = '''
gens x y
def x*y^3*x - y
'''


@pytest.fixture
def ring():
    return FreeAlgebra(Alphabet(['x', 'y']), Field())


@pytest.fixture
def ring3():
    return FreeAlgebra(Alphabet(['x', 'y', 'w']), Field())


@pytest.fixture
def poly3():
    return parse_text(POLY3, max_degree=8)


@pytest.fixture
def ex53():
    return parse_text(EX53, max_degree=10)


@pytest.fixture
def ex52():
    return parse_text(EX52, max_degree=8)


@pytest.fixture
def free2():
    return parse_text(FREE, max_degree=6)


@pytest.fixture
def sl2():
    return parse_text(SL2, max_degree=6)


@pytest.fixture
def sl2_perturbed():
    return parse_text(SL2_PERTURBED, max_degree=6)


@pytest.fixture
def weyl():
    return parse_text(WEYL, max_degree=6)


@pytest.fixture
def section4():
    return parse_text(SECTION4, max_degree=8)


@pytest.fixture
def cubic3():
    return parse_text(CUBIC3, max_degree=8)


@pytest.fixture
def as4():
    return parse_text(AS4, max_degree=8)


@pytest.fixture
def cubic_def():
    return parse_text(CUBIC_DEF, max_degree=8)


@pytest.fixture
def texts():
    return {
        'poly3': POLY3,
        'ex53': EX53,
        'ex52': EX52,
        'sl2': SL2,
        'sl2_perturbed': SL2_PERTURBED,
        'weyl': WEYL,
        'section4': SECTION4,
        'cubic3': CUBIC3,
        'cubic_def': CUBIC_DEF,
        'self_overlap': SELF_OVERLAP
    }
