#!/usr/bin/python
from __future__ import with_statement, print_function
import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout

from cyclepatterns.__main__ import main


class CommandLineTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls._dir = tempfile.mkdtemp()
        cls._small = os.path.join(cls._dir, "small.json")
        with open(cls._small, "w") as fh:
            json.dump({"max_n": 5, "max_cycle": 5}, fh)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls._dir)

    def _run(self, *argv):
        out = io.StringIO()
        with redirect_stdout(out):
            code = main(list(argv) + ["--quiet"])
        return code, out.getvalue()

    def test_count(self):
        code, out = self._run("count", "--pattern", "3142", "--mode", "ncm", "--n", "7")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "4278")
        code, out = self._run("count", "--pattern", "3142", "--mode", "nm", "--n", "7", "--format", "csv")
        self.assertEqual(out, "n,count\n7,4237\n")

    def test_count_json(self):
        code, out = self._run("count", "--patterns", "123,132", "--mode", "ncm", "--n", "3", "--format", "json")
        data = json.loads(out)
        self.assertEqual(data["count"], "4")
        self.assertEqual(data["patterns"], "123,132")

    def test_tables(self):
        code, out = self._run("table", "--pattern", "12", "--mode", "ncm", "--max-n", "2", "--format", "csv")
        self.assertEqual(out, "n,count\n0,1\n1,1\n2,1\n")
        code, out = self._run("cycles", "--pattern", "3142", "--mode", "ncm", "--max-n", "5")
        self.assertEqual([line.split()[1] for line in out.splitlines()], ["0", "1", "1", "2", "5", "20"])

    def test_series(self):
        code, out = self._run("series", "--id", "gj:k=3", "--order", "6", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[1:], ["0,1", "1,1", "2,2", "3,5", "4,17", "5,70", "6,349"])
        code, out = self._run("series", "--id", "ncm132", "--order", "3", "--format", "json")
        self.assertEqual(json.loads(out)["order"], 3)

    def test_errors(self):
        self.assertEqual(self._run("count", "--pattern", "1a", "--mode", "ncm", "--n", "3")[0], 2)
        self.assertEqual(self._run("series", "--id", "nothing", "--order", "3")[0], 2)
        self.assertEqual(self._run("count", "--pattern", "12", "--mode", "ncm", "--n", "6",
                                   "--config", self._small)[0], 3)
        self.assertEqual(self._run("cycles", "--pattern", "12", "--mode", "ncm", "--max-n", "3",
                                   "--config", os.path.join(self._dir, "missing.json"))[0], 2)
        self.assertEqual(self._run("count", "--pattern", "12", "--mode", "ncm", "--n", "-1")[0], 2)
        self.assertEqual(self._run("table", "--pattern", "12", "--mode", "ncm", "--max-n", "-1")[0], 2)
        self.assertEqual(self._run("check", "--suite", "bijection", "--max-n", "-1")[0], 2)
        with self.assertRaises(SystemExit):
            self._run("cycles", "--pattern", "12", "--mode", "nm", "--max-n", "3")

    def test_check_and_errata(self):
        code, out = self._run("check", "--suite", "bijection", "--max-n", "4", "--format", "json")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["passed"])
        code, out = self._run("errata", "--format", "json")
        self.assertIn("thm12-signs", [entry["id"] for entry in json.loads(out)])


def suite():
    return unittest.TestLoader().loadTestsFromTestCase(CommandLineTestCase)


if __name__ == "__main__":
    unittest.main()
