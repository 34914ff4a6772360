glb_params_list = []  # = where we store the parameters and default values of parameters. A list of named tuples
glb_paramsvals_list = []  # = where we store parameter values.
from collections import namedtuple
glb_param = namedtuple('glb_param', 'type module parname defaultval')
import re
import sys

# Parameter errors are usage errors: the front end maps them to exit code 2.
def param_error(*lines):
    print("Error: " + lines[0])
    for line in lines[1:]:
        print(line)
    sys.exit(2)

def initialize_param(input):
    if get_params_idx(input) == -1:
        glb_params_list.append(input)
        glb_paramsvals_list.append(input.defaultval)
    else:
        print("initialize_param() minor warning: Did nothing; already initialized parameter "+input.module+"::"+input.parname)

# Given the named tuple `input`, defined according to
#    namedtuple('glb_param', 'type module parname defaultval'),
#    where defaultval need not be set,
#    return the list index of glb_params_list that matches `input`.
# On error returns -1
def get_params_idx(input):
    list = [i for i, v in enumerate(glb_params_list)
            if (input.type=="ignoretype" or input.type==v[0]) and input.module == v[1] and input.parname == v[2]]
    if list == []:
        return -1 # No match found => error out!
    if len(list) > 1:
        param_error("Found multiple parameters matching "+str(input))
    return list.pop()

def get_params_value(input):
    idx = get_params_idx(input)
    if idx < 0:
        param_error("could not find a parameter matching: "+str(input))
    return glb_paramsvals_list[idx]

def idx_from_str(varname,modname=""):
    if "::" in varname:
        splitstring = re.split('::', varname)
        modname=splitstring[0]
        varname=splitstring[1]

    if modname == "":
        list = [i for i, v in enumerate(glb_params_list) if v[2] == varname]
    else:
        list = [i for i, v in enumerate(glb_params_list) if (v[1] == modname and v[2] == varname)]
    if list == []:
        param_error("Could not find a parameter matching \""+varname+"\"")
    if len(list) > 1:
        param_error("Found more than one parameter named \""+varname+"\". Use module::name instead.")
    return list.pop()

def parval_from_str(string):
    return glb_paramsvals_list[idx_from_str(string)]

def set_parval_from_str(string,value):
    glb_paramsvals_list[idx_from_str(string)] = value

# Convert the string `value` to the declared type of parameter idx.
def typed_value(idx, value, where):
    partype = glb_params_list[idx].type
    if partype == "bool":
        if value == "True":
            return True
        if value == "False":
            return False
        param_error(where + ": \"bool\" type can only take values of \"True\" or \"False\"")
    if partype == "INT":
        try:
            return int(value)
        except ValueError:
            param_error(where + ": \"INT\" type needs an integer, got \"" + value + "\"")
    if partype == "char":
        return value
    param_error("type \""+partype+"\" on variable \""+ glb_params_list[idx].parname +"\" is unsupported.",
                "Supported types include: bool, INT, and char")

# set_paramsvals_value:
# Parses a string like
#    module::variablename=value  # optional comment
# into its component parts: module,variablename,value,
# then sets the matching entry of glb_paramsvals_list.
# Used for parameter file lines (filename != "") and for
# command-line overrides (filename == ""). Lines starting
# with a hash and blank lines are skipped.
def set_paramsvals_value(line,filename=""):
    stripped_line_of_text = line.strip()
    if stripped_line_of_text == "" or stripped_line_of_text.startswith("#"):
        return
    single_param_def = re.split('::|=|#', stripped_line_of_text)

    if len(single_param_def) < 3:
        if filename != "":
            param_error("the line " + stripped_line_of_text + " in parameter file " + filename + " is not in the form",
                        "\"module::variable = value\"")
        param_error("the command-line argument " + stripped_line_of_text + " is not in the form",
                    "\"module::variable=value\"")

    single_param_def = [part.strip() for part in single_param_def]

    idx = get_params_idx(glb_param("ignoretype", single_param_def[0], single_param_def[1], "ignoredefval"))
    if idx == -1:
        if filename != "":
            where = "when reading line \"" + stripped_line_of_text + "\" in parameter file \"" + filename + "\""
        else:
            where = "when parsing command-line argument \"" + stripped_line_of_text + "\""
        param_error(where + ": could not find parameter \"" + single_param_def[1] +
                    "\" in \"" + single_param_def[0] + "\" module.")
    glb_paramsvals_list[idx] = typed_value(idx, single_param_def[2], single_param_def[0]+"::"+single_param_def[1])

def read_param_file(filename):
    with open(filename, "r") as file:
        for line in file:
            set_paramsvals_value(line, filename)

# Parameter file with the current values; the same format read_param_file() accepts.
def param_file_string(filename="returnstring"):
    output = ""
    for i in range(len(glb_params_list)):
        output += glb_params_list[i].module + "::" + glb_params_list[i].parname + " = " + \
                  str(glb_paramsvals_list[i]) + "  # " + glb_params_list[i].type + "\n"
    if filename == "stdout":
        print(output, end="")
        return
    elif filename == "returnstring":
        return output
    with open(filename, "w") as file:
        file.write(output)
    print("Wrote to file \"" + filename + "\"")

# Parameters shared by every module and by the command-line front end.
initialize_param(glb_param("INT",  "compalg", "seed",    42))
initialize_param(glb_param("INT",  "compalg", "jobs",    1))
initialize_param(glb_param("bool", "compalg", "verbose", False))
