from sympow import run_system

if __name__ == "__main__":
    run_system()
