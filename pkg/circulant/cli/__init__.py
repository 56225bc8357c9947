from circulant.cli.main import build_parser, main
