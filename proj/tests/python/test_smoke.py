import math

import numpy as np
import pytest

import scd


def two_triangles():
    edges = np.array([[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
    return scd.Graph(6, edges)


def test_graph_construction():
    g = two_triangles()
    assert g.num_nodes == 6
    assert g.num_edges == 6
    assert g.volume() == 12.0
    assert g.edges().shape == (6, 3)
    with pytest.raises(scd.ConfigError):
        scd.Graph(3, np.array([[0, 1, 2, 3]]))


def test_netmf_k2_entry_is_ln2():
    k2 = scd.Graph(2, np.array([[0, 1]]))
    m = scd.netmf_target(k2, window=1, negative=1)
    assert m[0, 1] == pytest.approx(math.log(2.0), abs=1e-12)


def test_embeddings_have_expected_shape():
    g = two_triangles()
    assert scd.netmf_embed(g, window=2, dimension=4).shape == (6, 4)
    assert scd.ppr_embed(g).shape == (6, 6)
    x = scd.ppr_vector(scd.Graph(2, np.array([[0, 1]])), 0)
    assert x == pytest.approx([0.5405, 0.4594], abs=1e-4)


def test_detect_two_triangles():
    result = scd.detect(two_triangles(), windows=[2], dimensions=[4])
    labels = result["labels"]
    assert result["k"] == 2
    assert len(set(labels[:3])) == 1 and len(set(labels[3:])) == 1 and labels[0] != labels[3]
    assert result["params"]["window"] == 2
    assert max(r["silhouette"] for r in result["records"] if r["ok"]) == result["silhouette"]


def test_detect_is_deterministic():
    g, _, _ = scd.generate_lfr(n=200, avg_deg=10, max_deg=30, mixing=0.1, seed=3)
    a = scd.detect(g, seed=5)
    b = scd.detect(g, seed=5)
    assert np.array_equal(a["labels"], b["labels"])


def test_metrics():
    assert scd.ari([0, 0, 1, 1], [0, 1, 0, 1]) == -0.5
    assert scd.nmi([0, 0, 1, 1], [5, 5, 7, 7]) == pytest.approx(1.0)
    assert scd.modularity(two_triangles(), [0, 0, 0, 1, 1, 1]) == 0.5


def test_silhouette_and_kmeans():
    rng = np.random.default_rng(0)
    x = np.vstack([rng.normal(0, 0.1, (20, 2)), rng.normal(5, 0.1, (20, 2))])
    labels, centers, inertia = scd.kmeans(x, 2, seed=1)
    assert centers.shape == (2, 2)
    assert inertia > 0
    assert scd.nmi(labels, [0] * 20 + [1] * 20) == pytest.approx(1.0)
    assert scd.silhouette(x, labels) > 0.9
    assert len(scd.silhouette_samples(x, labels)) == 40


def test_baselines_on_lfr():
    g, truth, mixing = scd.generate_lfr(n=300, avg_deg=12, max_deg=40, mixing=0.1, seed=1)
    assert abs(mixing - 0.1) <= 0.05
    assert scd.nmi(truth, scd.louvain(g, seed=0)) > 0.8
    assert len(scd.label_propagation(g, seed=0)) == 300


def test_search_helpers():
    assert scd.gamma_estimate(1000) == 100
    assert scd.valid_range(12, 4, 4) == [4, 8, 12]


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        scd.generate_lfr(n=100, avg_deg=15, max_deg=10)
    with pytest.raises(scd.ConfigError):
        scd.detect(two_triangles(), patience=0)
