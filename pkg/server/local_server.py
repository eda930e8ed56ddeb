import logging
import os
import sys

from flask import Flask, jsonify, request
from flask_cors import CORS

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import config as app_config
from controller import manager
from core.config import get_enumeration_method, get_server_address, get_size_guard
from core.errors import PatternHallError, SeriesFormatError
from utils.file_utils import parse_series_text

logger = logging.getLogger(__name__)

app = Flask(__name__)
CORS(app)  # Allow cross-origin requests from notebooks and dashboards


def _series_from(data):
    """`series` may be a list of numbers or the text of a series file"""
    series = data.get('series')
    if series is None:
        raise SeriesFormatError("series required", token="series")
    if isinstance(series, str):
        return parse_series_text(series, data.get('column'))
    if not isinstance(series, list):
        raise SeriesFormatError("series must be a list of numbers or a string", token=str(series))
    return parse_series_text(" ".join(str(v) for v in series))


def _run(handler):
    data = request.get_json(silent=True)
    if data is None:
        return jsonify({'error': 'JSON body required'}), 400
    try:
        return jsonify(handler(data))
    except PatternHallError as e:
        logger.info(f"[SERVER] {request.path}: {e}")
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        logger.exception(f"[SERVER] {request.path} failed")
        return jsonify({'error': str(e)}), 500


def _int_field(data, key, default=None):
    value = data.get(key)
    if value is None:
        return default
    try:
        return int(value)
    except (TypeError, ValueError):
        raise PatternHallError(f"{key} must be an integer, got {value!r}")


@app.route('/api/status', methods=['GET'])
def get_status():
    """Check if the local agent is running"""
    return jsonify({
        'status': 'online',
        'app': app_config.APP_NAME,
        'enumeration_method': get_enumeration_method(),
        'size_guards': {kind: get_size_guard(kind) for kind in sorted(app_config.DEFAULT_SIZE_GUARDS)},
    })


@app.route('/api/laws', methods=['GET'])
def get_laws():
    return jsonify({'laws': manager.list_laws()})


@app.route('/api/eval', methods=['POST'])
def evaluate():
    def handler(data):
        expression = data.get('expression')
        if not expression:
            raise PatternHallError("expression required")
        return manager.cmd_eval(expression)
    return _run(handler)


@app.route('/api/count', methods=['POST'])
def count_pattern():
    def handler(data):
        if not data.get('pattern'):
            raise PatternHallError("pattern required")
        return manager.cmd_count(_series_from(data), data['pattern'], data.get('partition'))
    return _run(handler)


@app.route('/api/entropy', methods=['POST'])
def entropy():
    def handler(data):
        patterns = data.get('patterns')
        return manager.cmd_entropy(_series_from(data), order=data.get('order'), delay=data.get('delay', 1),
                                   base=data.get('base'), mode='vincular' if patterns else 'consecutive',
                                   patterns=patterns, partition_text=data.get('partition'))
    return _run(handler)


@app.route('/api/verify', methods=['POST'])
def verify():
    def handler(data):
        law = data.get('law')
        if not law:
            raise PatternHallError("law required")
        return manager.cmd_verify(law, _int_field(data, 'max_size', 4), seed=_int_field(data, 'seed'),
                                  spot_checks=_int_field(data, 'spot_checks'))
    return _run(handler)


def run_server(host=None, port=None):
    """Start the Flask server (blocking)"""
    default_host, default_port = get_server_address()
    host = host or default_host
    port = port or default_port
    logger.info(f"[SERVER] PatternHall agent on http://{host}:{port}")
    app.run(host=host, port=port, debug=False, use_reloader=False)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    print("Starting PatternHall Local Agent...")
    run_server()
