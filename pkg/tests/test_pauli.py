from hypothesis import given
from hypothesis import strategies as st

from qrm_transversal.hypercube import Subcube
from qrm_transversal.pauli import PauliOp, commutes, subcube_pauli


def test_single_vertex_z():
    p = subcube_pauli("Z", Subcube.standard(3, 0))
    assert p.z_support == 1 and p.x_support == 0 and p.weight == 1


def test_full_square_x():
    assert subcube_pauli("X", Subcube.whole(2)).label() == "XXXX"


def test_edge_z_vertices():
    p = subcube_pauli("Z", Subcube.parse("0110+<4>"))
    assert p.z_support == (1 << 0b0110) | (1 << 0b1110)


def test_z_always_commutes_with_z():
    for a in (Subcube.parse("011+<1>"), Subcube.whole(3)):
        for b in (Subcube.parse("100"), Subcube.parse("<2,3>", 3)):
            assert commutes(subcube_pauli("Z", a), subcube_pauli("Z", b))


def test_logical_pair_anticommutes():
    z = subcube_pauli("Z", Subcube.parse("<1,2>", 4))
    x = subcube_pauli("X", Subcube.parse("1100+<3,4>"))
    assert not commutes(z, x)


def test_product_phase():
    x = PauliOp(1, x_support=1)
    z = PauliOp(1, z_support=1)
    # Z X = -X Z, and XZ is stored as the canonical form
    assert (z * x).phase_exp == 2
    assert (x * z).phase_exp == 0
    assert (x * x) == PauliOp(1)


paulis = st.builds(lambda x, z, ph: PauliOp(8, x, z, ph),
                   st.integers(0, 255), st.integers(0, 255), st.integers(0, 3))


@given(paulis, paulis, paulis)
def test_symplectic_bilinearity(p, q, r):
    assert commutes(p * q, r) == (commutes(p, r) == commutes(q, r))


@given(paulis, paulis, paulis)
def test_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
