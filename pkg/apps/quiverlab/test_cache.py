"""Unit tests for the ``cache`` module."""
import os
import tempfile
from unittest import mock

from django.test import SimpleTestCase
import yaml

from quiverlab import cache, factories, quiver
from quiverlab.exceptions import CacheError

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.


class CatalogCacheTestCase(SimpleTestCase):
    """Tests for reading and writing cached catalogs."""

    def setUp(self):
        """Create an empty cache directory."""
        self._tempdir = tempfile.TemporaryDirectory()
        self.directory = self._tempdir.name
        self.catalog = factories.a2_catalog()
        self.algebra = self.catalog.algebra

    def tearDown(self):
        """Remove the cache directory."""
        self._tempdir.cleanup()

    def write(self, text, dim_bound=4):
        """Write ``text`` where the ``kA2`` catalog would be cached."""
        path = cache.cache_path(self.directory, self.algebra, dim_bound)
        with open(path, 'w') as stream:
            stream.write(text)
        return path

    def test_hit(self):
        """A written catalog reads back equal."""
        path = cache.write_catalog(self.directory, self.catalog)
        self.assertTrue(os.path.exists(path))
        self.assertEqual(os.listdir(self.directory),
                         [os.path.basename(path)])
        found = cache.read_catalog(self.directory, self.algebra, 4)
        self.assertEqual(found.items, self.catalog.items)
        self.assertEqual(found.labels, self.catalog.labels)
        self.assertEqual(found.fingerprints, self.catalog.fingerprints)

    def test_miss(self):
        """Nothing cached is a miss."""
        self.assertIsNone(cache.read_catalog(self.directory, self.algebra, 4))

    def test_other_prime(self):
        """A catalog over another field is never reused."""
        cache.write_catalog(self.directory, self.catalog)
        other = quiver.parse_algebra(factories.A2_SPEC, prime=7)
        self.assertIsNone(cache.read_catalog(self.directory, other, 4))

    def test_key_mismatch(self):
        """A file under the right name with the wrong key is a miss."""
        data = cache.dump_catalog(self.catalog)
        self.write(yaml.safe_dump(data), dim_bound=3)
        self.assertIsNone(cache.read_catalog(self.directory, self.algebra, 3))

    def test_unreadable(self):
        """Broken YAML raises ``CacheError``."""
        self.write('items: [[[')
        with self.assertRaises(CacheError):
            cache.read_catalog(self.directory, self.algebra, 4)

    def test_not_a_catalog(self):
        """Other YAML documents raise ``CacheError``."""
        self.write('hello')
        with self.assertRaises(CacheError):
            cache.read_catalog(self.directory, self.algebra, 4)

    def test_malformed_items(self):
        """Items that are not modules raise ``CacheError``."""
        data = cache.dump_catalog(self.catalog)
        data['items'][0]['dims'] = [5]
        self.write(yaml.safe_dump(data))
        with self.assertRaises(CacheError):
            cache.read_catalog(self.directory, self.algebra, 4)
        data['version'] = 2
        self.write(yaml.safe_dump(data))
        with self.assertRaises(CacheError):
            cache.read_catalog(self.directory, self.algebra, 4)

    def test_cached_catalog(self):
        """The first call fills the cache, the second reads it."""
        first = cache.cached_catalog(self.directory, self.algebra, 4)
        self.assertEqual(len(os.listdir(self.directory)), 1)
        second = cache.cached_catalog(self.directory, self.algebra, 4)
        self.assertEqual(first.items, second.items)

    def test_cache_off(self):
        """An empty directory name turns the cache off."""
        catalog = cache.cached_catalog('', self.algebra, 4)
        self.assertEqual(len(catalog), 3)
        self.assertEqual(os.listdir(self.directory), [])

    def test_failed_dump(self):
        """A serialization error propagates and leaves no files behind."""
        error = yaml.representer.RepresenterError('cannot represent')
        with mock.patch('quiverlab.cache.yaml.safe_dump', side_effect=error):
            with self.assertRaises(yaml.representer.RepresenterError):
                cache.write_catalog(self.directory, self.catalog)
        self.assertEqual(os.listdir(self.directory), [])
