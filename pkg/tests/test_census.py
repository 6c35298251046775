"""
Tests for the small-graph census and its report.

Run with:
    pytest tests/test_census.py -v
    pytest tests/test_census.py -v -m slow     # 6- and 7-vertex censuses
"""

import json  # noqa: E402
import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import pandas as pd  # noqa: E402
import pytest  # noqa: E402

from storient.census.census import census_chunk, run_census
from storient.census.report import CensusClass, CensusReport
from storient.config import load_config
from storient.core.errors import UnsupportedSizeError
from storient.graph.canonical import canonical_form
from storient.graph.generators import wheel
from storient.graph.graph import labeled_graph_count
from storient.graph.graph6 import write_graph6


def _w5_report() -> CensusReport:
    code = canonical_form(wheel(5))
    return CensusReport(
        n=6,
        total_labeled=labeled_graph_count(6),
        examined_labeled=labeled_graph_count(6),
        non_orientable_labeled=72,
        filtered_labeled=72,
        classes=[CensusClass(code, write_graph6(code.to_graph()), True)],
        connected_only=False,
        elapsed=12.5,
    )


class TestCensus:
    def test_four_vertices(self):
        report = run_census(4, progress=False)
        assert report.total_labeled == 64
        assert report.examined_labeled == 64
        assert report.classes == []

    def test_five_vertices_all_orientable(self):
        report = run_census(5, progress=False)
        assert report.total_labeled == 1024
        assert report.non_orientable_labeled == 0
        assert report.connected_class_count == 0

    def test_connected_only_skips(self):
        assert run_census(4, connected_only=True, progress=False).examined_labeled == 38
        report = run_census(5, connected_only=True, progress=False)
        assert report.examined_labeled == 728
        assert report.connected_only

    def test_worker_count_does_not_change_report(self):
        single = run_census(5, workers=1, chunk_size=1024, progress=False)
        pooled = run_census(5, workers=2, chunk_size=100, progress=False)
        assert single.to_json() == pooled.to_json()

    def test_chunk_finds_wheel(self):
        index = sum(
            1 << bit
            for bit, (u, v) in enumerate(
                (u, v) for v in range(1, 6) for u in range(v)
            )
            if wheel(5).has_edge(u, v)
        )
        result = census_chunk((6, index, index + 1, False, load_config()))
        assert result.examined == 1
        assert result.non_orientable == 1
        assert result.filtered == 1
        assert result.codes == [(canonical_form(wheel(5)), True)]

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            run_census(8)

    @pytest.mark.slow
    def test_six_vertices_only_w5(self):
        report = run_census(6, progress=False)
        assert report.non_orientable_iso_classes == [canonical_form(wheel(5))]
        assert report.non_orientable_labeled == 72
        assert report.filtered_labeled == 72

    @pytest.mark.slow
    def test_seven_vertices_connected(self):
        report = run_census(7, connected_only=True, workers=4, progress=False)
        assert len(report.classes) == 25
        assert report.connected_class_count == 25
        w5 = canonical_form(wheel(5))
        assert all(c.code != w5 for c in report.classes)


class TestCensusReport:
    def setup_method(self):
        self.report = _w5_report()

    def test_json_layout(self):
        data = json.loads(self.report.to_json())
        assert data["schema"] == 1
        assert data["class_count"] == 1
        assert data["connected_class_count"] == 1
        assert data["classes"][0]["graph6"] == self.report.classes[0].graph6
        assert "elapsed" not in data

    def test_timing_on_request(self):
        assert self.report.to_dict(timing=True)["elapsed"] == 12.5

    def test_dataframe(self):
        frame = self.report.to_dataframe()
        assert list(frame.columns) == ["n", "bits", "graph6", "connected", "edges"]
        assert frame.loc[0, "edges"] == 10

    def test_save(self, tmp_path):
        self.report.save(tmp_path / "census.json")
        self.report.save_csv(tmp_path / "census.csv")
        saved = json.loads((tmp_path / "census.json").read_text())
        assert saved == self.report.to_dict()
        table = pd.read_csv(tmp_path / "census.csv")
        assert table["graph6"].tolist() == [self.report.classes[0].graph6]
