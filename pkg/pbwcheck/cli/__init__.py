from .grammar import parse_poly
from .parser import PresentationFile, load, load_text, parse, parse_text
from .report import Report, render_json, render_text
from .commands import build_parser, main, run
