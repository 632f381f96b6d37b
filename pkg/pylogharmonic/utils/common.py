import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator, Union

PathLike = Union[str, Path]


@contextmanager
def atomic_write(path: PathLike, mode: str = 'w') -> Iterator[IO]:
    """ Writes to a temporary file next to `path` and renames it on success

    Readers never observe a partially written file.
    """
    target = Path(path)
    assert target.parent.exists(), f'{target.parent} does not exist'
    handle = tempfile.NamedTemporaryFile(mode=mode,
                                         dir=target.parent,
                                         prefix=f'.{target.name}.',
                                         delete=False)
    try:
        with handle:
            yield handle
        os.replace(handle.name, target)
    except BaseException:
        Path(handle.name).unlink(missing_ok=True)
        raise


def parse_radii(text: str) -> list:
    """ '0.3,0.6, 0.9' -> [0.3, 0.6, 0.9] """
    return [float(item) for item in text.split(',') if item.strip()]
