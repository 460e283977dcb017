import json
import os
import re
import logging
from typing import Any, List, Type

import pandas as pd
from pydantic import BaseModel

def sanitize_filename(filename: str) -> str:
    """
    Sanitizes a string to be used as a safe filename.
    Removes invalid characters and limits length.
    """
    # Remove invalid characters
    sanitized = re.sub(r'[<>:"/\\|?*\x00-\x1f]', '', filename)
    # Replace spaces and dashes with underscores
    sanitized = re.sub(r'[\s-]+', '_', sanitized)
    # Limit filename length to 200 characters to avoid OS limitations
    return sanitized[:200]

def save_records_to_csv(records: List[BaseModel], filename: str, model: Type[BaseModel]) -> pd.DataFrame:
    """
    Writes pydantic records to a CSV file with one column per model field.
    An empty list still produces the header row.
    """
    fieldnames = list(model.model_fields.keys())
    df = pd.DataFrame([record.model_dump() for record in records], columns=fieldnames)
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)
    df.to_csv(filename, index=False, encoding="utf-8")
    logging.info(f"Saved {len(df)} records to '{filename}'.")
    return df

def load_records_from_csv(filename: str) -> pd.DataFrame:
    return pd.read_csv(filename, dtype=str, keep_default_na=False)

def save_to_json(data: Any, filename: str):
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)
    logging.info(f"Saving data to '{filename}'.")
    with open(filename, 'w', encoding='utf-8') as f:
        json.dump(data, f, ensure_ascii=False, indent=4)
