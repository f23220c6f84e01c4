"""An on-disk cache of enumerated catalogs.

Each catalog is one YAML document::

    magic: quiverlab-catalog
    version: 1
    key: {algebra_hash: ..., prime: 101, dim_bound: 4}
    seed: 42
    trials: 32
    labels: [S2, S1, P1]
    fingerprints: [[1, 0, 1], ...]
    items:
    - dims: [0, 1]
      mats: {a: [[...]]}

A file whose key differs from the requested one is a miss, never a reason to
recompute with other bounds. A file that cannot be read back raises
``CacheError``. Files are written to a temporary name first and then renamed,
so a reader never sees half a catalog.

"""
import logging
import os
import tempfile

from django.core.exceptions import ValidationError
import yaml

from quiverlab import rep
from quiverlab.exceptions import CacheError

logger = logging.getLogger(__name__)

MAGIC = 'quiverlab-catalog'
VERSION = 1


def cache_key(algebra, dim_bound):
    """Return the key a catalog of ``algebra`` is filed under.

    >>> from quiverlab import factories
    >>> key = cache_key(factories.a2_algebra(), 4)
    >>> key['prime'], key['dim_bound'], len(key['algebra_hash'])
    (101, 4, 64)

    """
    return {
        'algebra_hash': algebra.digest,
        'prime': algebra.prime,
        'dim_bound': dim_bound,
    }


def cache_path(directory, algebra, dim_bound):
    """Return the file name for a catalog of ``algebra``."""
    return os.path.join(directory, '{}-p{}-d{}.yaml'.format(
        algebra.digest[:16], algebra.prime, dim_bound
    ))


def dump_catalog(catalog):
    """Return ``catalog`` as plain data."""
    return {
        'magic': MAGIC,
        'version': VERSION,
        'key': cache_key(catalog.algebra, catalog.dim_bound),
        'seed': catalog.seed,
        'trials': catalog.trials,
        'labels': list(catalog.labels),
        'fingerprints': [list(row) for row in catalog.fingerprints],
        'items': [
            {
                'dims': list(item.dims),
                'mats': {name: matrix.tolist()
                         for name, matrix in sorted(item.mats.items())},
            }
            for item in catalog.items
        ],
    }


def load_catalog(data, algebra):
    """Rebuild a catalog of ``algebra`` from ``dump_catalog`` output.

    Raise ``CacheError`` if ``data`` is not a catalog document.

    """
    if not isinstance(data, dict) or data.get('magic') != MAGIC:
        raise CacheError('Not a quiverlab catalog.')
    if data.get('version') != VERSION:
        raise CacheError('Unsupported catalog version {!r}.'.format(
            data.get('version')
        ))
    try:
        items = [
            rep.Representation(algebra, item['dims'], item['mats'])
            for item in data['items']
        ]
        return rep.IndecCatalog(
            algebra,
            items,
            data['key']['dim_bound'],
            seed=data['seed'],
            trials=data['trials'],
            labels=data['labels'],
            fingerprints=data['fingerprints'],
        )
    except (KeyError, TypeError, ValueError, ValidationError) as error:
        raise CacheError('Malformed catalog: {}.'.format(error))


def read_catalog(directory, algebra, dim_bound):
    """Return the cached catalog, or ``None`` on a miss."""
    path = cache_path(directory, algebra, dim_bound)
    if not os.path.exists(path):
        logger.info('catalog cache miss: %s', path)
        return None
    try:
        with open(path) as stream:
            data = yaml.safe_load(stream)
    except (OSError, yaml.YAMLError) as error:
        raise CacheError('Cannot read {}: {}.'.format(path, error))
    if isinstance(data, dict) and data.get('magic') == MAGIC and \
            data.get('key') != cache_key(algebra, dim_bound):
        logger.info('catalog cache key mismatch: %s', path)
        return None
    catalog = load_catalog(data, algebra)
    logger.info('catalog cache hit: %s', path)
    return catalog


def write_catalog(directory, catalog):
    """Write ``catalog`` into ``directory`` and return the file name.

    The file is written to a temporary name and moved into place. A failed
    write removes the temporary.

    """
    path = cache_path(directory, catalog.algebra, catalog.dim_bound)
    temporary = None
    try:
        os.makedirs(directory, exist_ok=True)
        handle, temporary = tempfile.mkstemp(dir=directory, suffix='.tmp')
        with os.fdopen(handle, 'w') as stream:
            yaml.safe_dump(dump_catalog(catalog), stream,
                           default_flow_style=None, sort_keys=True)
        os.replace(temporary, path)
        temporary = None
    except OSError as error:
        raise CacheError('Cannot write {}: {}.'.format(path, error))
    finally:
        if temporary is not None:
            try:
                os.remove(temporary)
            except OSError:
                pass
    logger.info('wrote catalog cache %s', path)
    return path



def cached_catalog(directory, algebra, dim_bound,
                   budget=rep.DEFAULT_BUDGET, seed=rep.DEFAULT_SEED,
                   trials=rep.DEFAULT_TRIALS):
    """Return the catalog of ``algebra``, enumerating and caching it on a miss.

    An empty ``directory`` turns the cache off.

    """
    if directory:
        catalog = read_catalog(directory, algebra, dim_bound)
        if catalog is not None:
            return catalog
    catalog = rep.enumerate_indecomposables(algebra, dim_bound, budget, seed,
                                            trials)
    if directory:
        write_catalog(directory, catalog)
    return catalog
