"""Smoke tests for the archlab extension module."""

import json
import unittest

import archlab

DELAYER = json.dumps({
    "suppl_input": 1,
    "neurons": [
        {"id": 0, "tau": "1/2", "leak": "1/2", "weights": {"1": "1"}},
    ],
})

SERIES3 = json.dumps({
    "suppl_input": 1,
    "neurons": [
        {"id": 0, "tau": "1/2", "leak": "0", "weights": {"3": "1"}},
        {"id": 1, "tau": "1/2", "leak": "0", "weights": {"0": "1"}},
        {"id": 2, "tau": "1/2", "leak": "0", "weights": {"1": "1"}},
    ],
})

CONTRA = json.dumps({
    "suppl_input": 2,
    "neurons": [
        {"id": 0, "tau": "1/2", "leak": "1/2",
         "weights": {"1": "-1/2", "2": "1"}},
        {"id": 1, "tau": "1/2", "leak": "1/2",
         "weights": {"0": "-1", "3": "1"}},
    ],
})


class SmokeTest(unittest.TestCase):
    def test_parse_and_serialize(self):
        circuit = archlab.Circuit.from_json(DELAYER)
        self.assertEqual(circuit.size, 1)
        self.assertEqual(circuit.suppl_input, 1)
        self.assertEqual(circuit.time, 0)
        again = archlab.Circuit.from_json(circuit.to_json())
        self.assertEqual(again.to_json(), circuit.to_json())

    def test_rejects_bad_documents(self):
        with self.assertRaises(archlab.CircuitSchemaError):
            archlab.Circuit.from_json('{"neurons": []}')
        with self.assertRaises(archlab.ConstraintError):
            archlab.Circuit.from_json(
                '{"suppl_input":1,"neurons":[{"id":0,"tau":"0","leak":"0",'
                '"weights":{}}]}')

    def test_simulate_delays_by_one_step(self):
        rows = archlab.simulate(archlab.Circuit.from_json(DELAYER), "101")
        self.assertEqual([r["t"] for r in rows], [0, 1, 2, 3])
        self.assertEqual([r["outputs"][0] for r in rows],
                         [False, True, False, True])
        self.assertEqual(rows[1]["potentials"], ["1"])

    def test_stepping_matches_simulate(self):
        circuit = archlab.Circuit.from_json(DELAYER)
        stepped = circuit.step([True]).step([False])
        self.assertEqual(stepped.time, 2)
        # histories are newest-first
        self.assertEqual(stepped.output(0), [False, True, False])
        self.assertEqual(stepped.cur_pot(0), "0")

    def test_classify(self):
        self.assertEqual(archlab.classify(archlab.Circuit.from_json(SERIES3)),
                         ["series"])
        self.assertEqual(archlab.classify(archlab.Circuit.from_json(CONTRA)),
                         ["contralateral-inhibition"])

    def test_check_passes(self):
        verdict = archlab.check(archlab.Circuit.from_json(DELAYER),
                                "delayer-effect", max_len=6)
        self.assertEqual(verdict["status"], "pass")
        self.assertEqual(verdict["checked"], 126)

    def test_check_reports_hypotheses(self):
        verdict = archlab.check(archlab.Circuit.from_json(CONTRA), "nl-case1")
        self.assertEqual(verdict["status"], "hypotheses-not-met")
        self.assertIn("negative-loop", verdict["hypothesis"])

    def test_winner_takes_all(self):
        verdict = archlab.check(archlab.Circuit.from_json(CONTRA),
                                "ci-winner-takes-all", max_len=12)
        self.assertEqual(verdict["status"], "pass")
        self.assertEqual(verdict["checked"], 13)

    def test_property_catalog(self):
        names = archlab.properties()
        self.assertIn("delayer-effect", names)
        self.assertIn("ci-winner-takes-all", names)
        self.assertEqual(len(names), 15)

    def test_repeat_pattern(self):
        self.assertEqual(archlab.repeat_pattern([True, False], 3),
                         [True, False, True])
        self.assertEqual(archlab.repeat_pattern([True, False], 4),
                         [False, True, False, True])


if __name__ == "__main__":
    unittest.main()
