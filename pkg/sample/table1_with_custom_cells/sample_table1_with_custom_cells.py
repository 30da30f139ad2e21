from functools import partial

from aiearth.repetition.job import Table1Job, render_table
from aiearth.repetition.job.table1_job import EvidenceStep, Table1Cell, lower_bracket, upper_search


class Job(Table1Job):
    profile = "quick"
    pattern = "1,0"

    def __init__(self):
        super().__init__(self.profile, invocation="sample_table1_with_custom_cells.py")

    def set_cells(self):
        budget = self.cfg.search.node_budget
        # 每隔一个主干顶点挂一个叶子的毛毛虫，4 色下的 3/2 界
        return [
            Table1Cell("CP", "4", "3/2", [
                EvidenceStep("lower", "bracket cp-spec pattern=%s" % self.pattern,
                             partial(lower_bracket, "cp-spec", 4, "3/2", 1, 12, budget, pattern=self.pattern)),
                EvidenceStep("upper", "exists cp-spec pattern=%s" % self.pattern,
                             partial(upper_search, "cp-spec", 16, 4, "3/2+", budget, pattern=self.pattern)),
            ]),
        ]


if __name__ == '__main__':
    job = Job()
    print(render_table(job.run()))
