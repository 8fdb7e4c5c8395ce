import pytest

from src.submodulos.walks import dense_sim, layers
from src.submodulos.walks.core_math import binom
from src.submodulos.walks.layers import LayerRelation


################### TESTS de vecinos entre capas ###################

def test_capa_cero_solo_ve_la_capa_s():
    assert layers.layer_neighbors(0, 10, 3) == {3}


def test_vecinos_n6_s2_l1():
    assert layers.layer_neighbors(1, 6, 2) == {1, 3}


def test_vecinos_n6_s3_l5():
    assert layers.layer_neighbors(5, 6, 3) == {2, 4}


def test_capa_fuera_de_rango():
    with pytest.raises(ValueError, match="0 <= l <= 6"):
        layers.layer_neighbors(7, 6, 2)


def test_vecinos_coinciden_con_censo():
    for n, s in [(6, 2), (7, 3), (8, 1)]:
        rel = LayerRelation(n, s)
        censo = dense_sim.layer_adjacency_census(dense_sim.symmetric_generating_set(n, s))
        for l in range(n + 1):
            assert {t for (a, t) in censo if a == l} == rel.neighbors(l)


################### TESTS de conteos ###################

@pytest.mark.parametrize("n, s", [(8, 2), (10, 3), (12, 1)])
def test_conteo_desde_el_origen_es_m(n, s):
    assert layers.connection_count(0, s, n, s) == binom(n, s)


def test_conteo_n8_s2_capa2():
    assert layers.connection_count(2, 2, 8, 2) == 12


def test_conteo_capas_no_adyacentes():
    with pytest.raises(ValueError, match="no son adyacentes"):
        layers.connection_count(0, 4, 8, 2)


def test_conteos_suman_m():
    rel = LayerRelation(9, 3)
    for l in range(10):
        assert sum(rel.count(l, t) for t in rel.neighbors(l)) == binom(9, 3)


def test_conteo_simetrico_por_tamanos():
    rel = LayerRelation(11, 4)
    for l in range(12):
        for t in rel.neighbors(l):
            assert rel.layer_size(l) * rel.count(l, t) == rel.layer_size(t) * rel.count(t, l)


def test_conteos_coinciden_con_censo():
    rel = LayerRelation(8, 3)
    censo = dense_sim.layer_adjacency_census(dense_sim.symmetric_generating_set(8, 3))
    for l in range(9):
        for t in rel.neighbors(l):
            assert censo[(l, t)] == {rel.count(l, t)}


################### TESTS de la sucesión k ###################

def test_k_sequence_decreciente_con_hipotesis():
    seq = layers.k_sequence(24, 4)
    assert seq.hypothesis_ok
    assert len(seq.values) == 4
    assert seq.values[0] == binom(24, 4)
    assert seq.strictly_decreasing


def test_k_sequence_sin_hipotesis():
    seq = layers.k_sequence(10, 2)
    assert not seq.hypothesis_ok


def test_weight_inverse_map():
    inversa = layers.weight_inverse_map(12, 1)
    assert inversa == {12: 0, 2: 2}


def test_weight_inverse_map_no_inyectiva():
    # con n = 2s las capas 0 y 2s ven ambas C(n, s) vecinos en L_s
    with pytest.raises(ValueError, match="no son inyectivos"):
        layers.weight_inverse_map(4, 2)


################### TESTS de capas comunes ###################

def test_comunes_coinciden_con_censo():
    for n, s in [(6, 2), (7, 3), (9, 2)]:
        rel = LayerRelation(n, s)
        genset = dense_sim.symmetric_generating_set(n, s)
        for l in range(n + 1):
            bruto = dense_sim.common_layers_census(genset, l)
            for t in range(n + 1):
                if (l - t) % 2 or abs(l - t) > 2 * s or (l == t and l in (0, n)):
                    continue
                assert bruto.get(t, set()) == rel.common(l, t)


@pytest.mark.parametrize("l, t", [(1, 2), (0, 8), (0, 0), (6, 6)])
def test_comunes_pares_invalidos(l, t):
    with pytest.raises(ValueError):
        layers.local_common_layers(l, t, 6, 2)


################### TESTS de tamaños y capas vacías ###################

def test_layer_sizes():
    assert layers.layer_sizes(4) == [1, 4, 6, 4, 1]


def test_capas_impares_vacias_con_s_par():
    assert layers.is_empty_layer(3, 8, 2)
    assert not layers.is_empty_layer(4, 8, 2)
    assert not layers.is_empty_layer(3, 8, 3)
