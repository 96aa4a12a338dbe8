"""Flask app for local debug runs.

Each route takes a JSON body with the same fields as the command flags
(`kind`, `spec`, `order`, `signs`, ...) and returns the command report
as JSON, or an error message with HTTP 400.
"""

from flask import Flask, jsonify, request

from cy4vertex.cli import run_command
from cy4vertex.errors import Cy4VertexError


app = Flask(__name__)


def _handle(command: str):

    def _abort_return(client_error: str, internal_error: str = None) -> tuple:
        if internal_error:
            print(f"ERROR! {command} failed: {internal_error}")
        else:
            print(f"ERROR! {command} failed: {client_error}")
        return client_error, 400

    body = request.get_json(silent=True)
    if body is None:
        body = {}
    if not isinstance(body, dict):
        return _abort_return("BAD DATA")

    try:
        _, result = run_command(command, body)
    except Cy4VertexError as e:  # Cy4VertexError(Exception)
        return _abort_return(e.message, f"{type(e).__name__}: {e.message}")

    response = dict(result.report)
    response["exit_code"] = result.exit_code
    response["table"] = result.table
    return jsonify(response)


@app.route('/vertex', methods=('GET', 'POST'))
def route_vertex():
    return _handle("vertex")


@app.route('/verify', methods=('GET', 'POST'))
def route_verify():
    return _handle("verify")


@app.route('/global', methods=('GET', 'POST'))
def route_global():
    return _handle("global")
