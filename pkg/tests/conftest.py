from deltasimplex import Simplex


def random_simplex(rng, max_dim=4, entry=4, max_volume=None):
    """Rejection-sample a full-dimensional simplex with small integer vertices."""
    while True:
        d = rng.randint(1, max_dim)
        verts = tuple(
            tuple(rng.randint(-entry, entry) for _ in range(d)) for _ in range(d + 1)
        )
        try:
            s = Simplex(verts)
        except ValueError:
            continue
        if max_volume is None or s.normalized_volume <= max_volume:
            return s
