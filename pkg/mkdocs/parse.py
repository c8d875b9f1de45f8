#!/usr/bin/env python3

import inspect
import os
from truthbench.tools.system import SentenceSystem, parse_system, load_system, format_system, closure
from truthbench.tools.options import Options
from truthbench.semantics.kripke import Interpretation, sk_eval, jump, least_fixed_point, enumerate_fixed_points, classify, compare, never_true
from truthbench.semantics.tarski import LevelMap, check_levels, infer_levels, apply_levels, tarski_eval
from truthbench.calculus.theory import Theory
from truthbench.calculus.proof import ProofScript, check_proof, parse_script, format_script
from truthbench.calculus.ipc import G4ip, ipc_decide
from truthbench.calculus.prover import prove, weak_falsity, check_instances
from truthbench.calculus.consistency import erase_box, consistency_check
from truthbench.tools.workbench import Command, run, demo


sub_dict = {}
for class_name in ['SentenceSystem', 'Interpretation', 'LevelMap', 'Theory', 'ProofScript', 'G4ip', 'Options']:
    sub_dict['{}.'.format(class_name)] = '[{0}]({0}.md#{0}).'.format(class_name)
    sub_dict['{} '.format(class_name)] = '[{0}]({0}.md#{0}) '.format(class_name)

def parse():
    classes = [
        [SentenceSystem, 'docs/classes'],
        [Interpretation, 'docs/classes'],
        [LevelMap, 'docs/classes'],
        [Theory, 'docs/classes'],
        [ProofScript, 'docs/classes'],
        [G4ip, 'docs/classes'],
        [Options, 'docs/classes'],
    ]

    for class_obj, folder in classes:
        ## Get documentation text
        doc_text = get_md_class(class_obj)
        if doc_text is None: continue
        ## Setup folder
        if not os.path.isdir(folder):
            os.makedirs(folder)
        ## Write file
        file_name = os.path.join(folder, '{}.md'.format(class_obj.__name__))
        with open(file_name, 'w') as out_file:
            out_file.write(doc_text)

    function_bundles = [
        [[Command, run, demo], 'docs/workbench.md', 'docs/workbench/preamble.md'],
        [[parse_system, load_system, format_system, closure, sk_eval, jump, least_fixed_point, enumerate_fixed_points, classify, compare, never_true,
          check_levels, infer_levels, apply_levels, tarski_eval], 'docs/semantics.md', None],
        [[check_proof, parse_script, format_script, ipc_decide, prove, weak_falsity, check_instances, erase_box, consistency_check],
         'docs/calculus.md', 'docs/calculus/preamble.md'],
    ]

    for func_list, output_file, preamble_file in function_bundles:
        ## Get documentation text
        doc_text = get_md_functions(func_list)
        ## Add preamble
        if preamble_file is not None:
            with open(preamble_file, 'r') as in_file:
                preamble = in_file.read()
            doc_text = '{}\n\n{}'.format(preamble, doc_text)
        ## Write file
        with open(output_file, 'w') as out_file:
            out_file.write(doc_text)

def link(doc):
    ## Insert page linking
    for key, val in sub_dict.items():
        if key in doc:
            doc = doc.replace(key, val)

    return doc

def append_doc_list(obj, doc_list, prefix = '', header_depth = '##'):
    obj_name = obj.__name__
    obj_doc = obj.__doc__
    ## If it doesn't have a doc string, skip
    if not obj_doc: return
    ## If doc string doesn't start with @TRUTHBENCH, skip
    if not obj_doc.startswith('@TRUTHBENCH'): return
    obj_doc = link(obj_doc)
    doc_list.append('{}{}'.format(header_depth, obj_name))
    if callable(obj):
        obj_sig = '{}{}{}'.format(prefix, obj_name, inspect.signature(obj))
        doc_list.append('```python\n{}\n```'.format(obj_sig))
    for line in obj_doc.split('\n'):
        ## Ignore @TRUTHBENCH line
        if line.startswith('@TRUTHBENCH'): continue
        doc_list.append(line.strip())

def get_md_class(class_obj):
    ## Class info
    class_name = class_obj.__name__
    docstring = class_obj.__doc__
    ## If doc string doesn't start with @TRUTHBENCH, skip
    if not docstring or not docstring.startswith('@TRUTHBENCH'):
        return
    md_list = []
    md_list.append('#{}'.format(class_name))
    md_list.append('```python\n{}{}\n```'.format(class_name, inspect.signature(class_obj)))
    for line in link(docstring).split('\n'):
        if line.startswith('@TRUTHBENCH'): continue
        md_list.append(line.strip())

    ## Get class members
    members = sorted([l for l in dir(class_obj) if not l.startswith('_')])

    callables = []
    non_callables = []
    for member in members:
        member_obj = getattr(class_obj, member)
        ## Set list to which entry is added
        this_list = callables if callable(member_obj) else non_callables
        if callable(member_obj):
            append_doc_list(member_obj, this_list, prefix = '{}.'.format(class_name))
        else:
            append_property(member, member_obj, this_list)

    ## Add non-callable properties
    if non_callables:
        md_list.append('#Properties')
        md_list.extend(non_callables)
    ## Add functions, i.e. callables
    if callables:
        md_list.append('#Member functions')
        md_list.extend(callables)

    return '\n'.join(md_list)

def append_property(member, member_obj, doc_list):
    member_doc = getattr(member_obj, '__doc__', None)
    if not member_doc or not member_doc.startswith('@TRUTHBENCH'): return
    doc_list.append('##{}'.format(member))
    for line in link(member_doc).split('\n'):
        if line.startswith('@TRUTHBENCH'): continue
        doc_list.append(line.strip())

def get_md_functions(func_list, header_depth = '##'):
    doc_list = []
    for func_obj in func_list:
        append_doc_list(func_obj, doc_list, header_depth = header_depth)

    return '\n'.join(doc_list)

if __name__ == '__main__':
    parse()
