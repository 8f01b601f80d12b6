# %% [markdown]
# # Scenario files and the command-line runner
#
# The same computations run from small scenario files. This script drives
# the runner in-process on the shipped configs and prints the head of each
# output.

# %%
from pathlib import Path

from raman_correlate.config import parse_config
from raman_correlate.csvio import format_csv
from raman_correlate.runners import run_dynamics, run_polariton, run_validity

configs = Path(__file__).parent / "configs"
for name, runner in (("dynamics", run_dynamics), ("polariton", run_polariton), ("validity", run_validity)):
    text = format_csv(runner(parse_config((configs / f"{name}.cfg").read_text())))
    print(f"--- {name}")
    print("\n".join(text.splitlines()[:10]))

# %% [markdown]
# From a shell:
#
#     raman-correlate polariton --config demos/configs/polariton.cfg --out g2.csv
#     raman-correlate verify --config demos/configs/verify.cfg
