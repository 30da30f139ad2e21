from .table1_job import Table1Cell, Table1Job, render_table, run_table1
