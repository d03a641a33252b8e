#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📁 ARQUIVO: spin_entangle/planilha.py
💾 FUNÇÃO: Exportação .xlsx das tabelas de varredura
🔧 DESCRIÇÃO: Mesmas colunas do CSV, cabeçalho em negrito com fundo verde,
              aba "Resumo" com os parâmetros da varredura
"""

import logging
from datetime import datetime
from typing import Dict, List, Sequence

import openpyxl
from openpyxl.styles import Font, PatternFill
from openpyxl.utils import get_column_letter

logger = logging.getLogger(__name__)

HEADER_FILL = PatternFill(start_color="D9EAD3", end_color="D9EAD3", fill_type="solid")


def gerar_planilha_varredura(rows: List[Dict], columns: Sequence[str], path: str,
                             resumo: Dict[str, object]) -> bool:
    """
    Grava a varredura numa planilha

    Args:
        rows: linhas na ordem da grade
        columns: cabeçalhos
        path: arquivo .xlsx
        resumo: pares campo → valor da aba "Resumo"

    Returns:
        bool: True se gravada
    """
    wb = openpyxl.Workbook()
    if 'Sheet' in wb.sheetnames:
        wb.remove(wb['Sheet'])

    ws = wb.create_sheet("Varredura", 0)
    for col_idx, header in enumerate(columns, 1):
        cell = ws.cell(row=1, column=col_idx, value=header)
        cell.font = Font(bold=True)
        cell.fill = HEADER_FILL

    for row_idx, row in enumerate(rows, 2):
        for col_idx, key in enumerate(columns, 1):
            value = row.get(key)
            ws.cell(row=row_idx, column=col_idx, value=value)
        if row.get('status') == 'erro':
            ws.cell(row=row_idx, column=1).font = Font(bold=True, color="FF0000")

    for col_idx, header in enumerate(columns, 1):
        col_letter = get_column_letter(col_idx)
        if header in ('form', 'status'):
            ws.column_dimensions[col_letter].width = 10
        elif header == 'erro':
            ws.column_dimensions[col_letter].width = 40
        else:
            ws.column_dimensions[col_letter].width = 16

    ws_resumo = wb.create_sheet("Resumo", 1)
    linhas = [("RESUMO DA VARREDURA", ""),
              ("Gerada em:", datetime.now().strftime("%d/%m/%Y %H:%M:%S"))]
    linhas.extend((f"{campo}:", valor) for campo, valor in resumo.items())
    for linha, (campo, valor) in enumerate(linhas, 1):
        ws_resumo.cell(row=linha, column=1, value=campo)
        ws_resumo.cell(row=linha, column=2, value=str(valor))
        if "RESUMO" in campo:
            ws_resumo.cell(row=linha, column=1).font = Font(bold=True, color="0066CC")
    ws_resumo.column_dimensions['A'].width = 30
    ws_resumo.column_dimensions['B'].width = 40

    wb.save(path)
    logger.info(f"📊 Planilha gravada: {path} ({len(rows)} linhas)")
    return True
