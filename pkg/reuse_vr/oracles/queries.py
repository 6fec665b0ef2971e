def batch_query(bundle, x):
    """Full-batch query: the gradient of F, P x, or (A x, A^T y), depending on the bundle."""
    return bundle.batch_query(x)


def sample_query(bundle, key, channel = None):
    return bundle.sample_query(key, channel)
