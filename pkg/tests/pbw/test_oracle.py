from pbwcheck.pbw import gr_hilbert_oracle


def test_enveloping_algebra(sl2):
    oracle = gr_hilbert_oracle(sl2)

    assert oracle.gr_dims == [1, 3, 6, 10, 15, 21, 28]
    assert oracle.gr_dims == oracle.dims
    assert oracle.injectivity == 6
    assert oracle.pbw_at_window


def test_weyl_algebra(weyl):
    oracle = gr_hilbert_oracle(weyl, 5)

    assert oracle.gr_dims == [1, 2, 3, 4, 5, 6]
    assert oracle.pbw_at_window


def test_cubic_deformation_loses_a_commutator(section4):
    oracle = gr_hilbert_oracle(section4, 6)

    assert oracle.mismatches[0] == 2
    assert oracle.injectivity == 1
    assert oracle.excess == []
    assert not oracle.pbw_at_window


def test_to_dict(sl2_perturbed):
    data = gr_hilbert_oracle(sl2_perturbed, 4).to_dict()

    assert data['mismatches']
    assert not data['pbw_at_window']
