import glob
import os
from typing import List


class FileIO:

    @staticmethod
    def read_lines(path: str) -> List[str]:
        """
        Lines of a session script, without trailing newlines.

        :param path: script file; blank lines and '#' comments are kept for the caller to skip
        """
        if not os.path.exists(path):
            raise FileNotFoundError(f"Script file not available at {path}")
        with open(path, encoding="utf-8") as handle:
            return handle.read().splitlines()

    @staticmethod
    def write_text(path: str, text: str):
        """Write a report, creating its folder when missing."""
        folder = os.path.dirname(path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")

    @staticmethod
    def list_files(folder, ext="txt", include_sub_folder=False) -> List[str]:
        pattern = os.path.join(folder, "**", f"*.{ext}") if include_sub_folder else os.path.join(folder, f"*.{ext}")
        return sorted(glob.glob(pattern, recursive=include_sub_folder))
