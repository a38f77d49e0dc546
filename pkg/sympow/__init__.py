from sympow.system import app

run_system = app
