"""Order-preserving parallel map for the subset-scanning deciders.

Results come back in input order regardless of worker count, so callers that
scan results in order are schedule-independent by construction.
"""

import multiprocessing


def pmap(fn, items, workers=1):
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    ctx = multiprocessing.get_context("fork")
    chunksize = max(1, len(items) // (workers * 4))
    with ctx.Pool(workers) as pool:
        return pool.map(fn, items, chunksize)
