from pdoring.cli.commands import run_line, run_script, script
from pdoring.cli.expression import parse_expr
from pdoring.cli.main import main
from pdoring.cli.session import Session, eval_expr
