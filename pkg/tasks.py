import os

from invoke import task


@task
def clean(ctx):
    """
    Clean pyc files and build assets.
    """
    join = os.path.join
    rm_files = []
    rm_dirs = []
    for base, subdirs, files in os.walk("."):
        if "__pycache__" in subdirs:
            rm_dirs.append(join(base, "__pycache__"))
        elif os.path.basename(base) == "__pycache__":
            rm_files.extend(join(base, f) for f in files)

    print("Removing compiled bytecode files")
    for path in rm_files:
        os.unlink(path)
    for path in rm_dirs:
        os.rmdir(path)


@task(help={"slow": "Also run the long differential grids."})
def test(ctx, slow=False):
    """
    Run the test suite with coverage.
    """
    marker = "" if slow else " -m 'not slow'"
    ctx.run(f"pytest tests/ --cov=mapfcc{marker}", pty=True)


@task
def lint(ctx):
    """
    Check code style with flake8.
    """
    ctx.run("flake8 src/ tests/")


@task(help={"suite": "trees, grids, small or mcc.", "count": "Number of instances."})
def bench(ctx, suite="small", count=20):
    """
    Run a seeded bench suite without timing, for comparable output.
    """
    ctx.run(f"python -m mapfcc bench --suite {suite} --count {count} --no-timing")
