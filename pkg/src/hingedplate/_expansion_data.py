"""Generated by tools/gen_expansions.py; do not edit."""

# name -> {a, b, qdeg, vars, terms}; each term is
# (ek, es, ez, ((i, j, l, sigma-coefficients ascending), ...))
EXPANSIONS = {
    'phi_g': {'a': 1, 'b': 1, 'qdeg': 1, 'vars': 'skz', 'terms': ((-1, -1, -2, ((0, 0, 0, ('-15/16', '-11/16', '-5/16', '-1/16')), (0, 0, 1, ('3/4', '-5/4', '1/4', '1/4')), (0, 0, 2, ('-3/2', '5/2', '-1/2', '-1/2')), (0, 1, 1, ('-3/16', '5/16', '-1/16', '-1/16')), (0, 1, 2, ('3/4', '-5/4', '1/4', '1/4')), (1, 0, 1, ('-3/16', '5/16', '-1/16', '-1/16')), (1, 0, 2, ('3/4', '-5/4', '1/4', '1/4')), (1, 1, 2, ('-3/8', '5/8', '-1/8', '-1/8')))), (-1, -1, 2, ((0, 0, 0, ('15/16', '11/16', '5/16', '1/16')), (0, 1, 1, ('3/16', '-5/16', '1/16', '1/16')), (1, 0, 1, ('3/16', '-5/16', '1/16', '1/16')), (1, 1, 2, ('3/8', '-5/8', '1/8', '1/8')))), (-1, 1, -4, ((0, 0, 0, ('-9/16', '3/16', '5/16', '1/16')), (0, 0, 1, ('9/8', '-3/8', '-5/8', '-1/8')), (0, 1, 1, ('-9/16', '3/16', '5/16', '1/16')), (1, 0, 1, ('-9/16', '3/16', '5/16', '1/16')))), (-1, 1, 0, ((0, 0, 0, ('9/16', '-3/16', '-5/16', '-1/16')), (0, 0, 1, ('1/8', '-3/8', '3/8', '-1/8')), (0, 1, 1, ('9/16', '-3/16', '-5/16', '-1/16')), (0, 1, 2, ('1/4', '-3/4', '3/4', '-1/4')), (1, 0, 1, ('9/16', '-3/16', '-5/16', '-1/16')), (1, 0, 2, ('1/4', '-3/4', '3/4', '-1/4')), (1, 1, 3, ('1/2', '-3/2', '3/2', '-1/2')))), (1, -1, -4, ((0, 0, 0, ('-9/16', '3/16', '5/16', '1/16')), (0, 0, 1, ('9/8', '-3/8', '-5/8', '-1/8')), (0, 1, 1, ('-9/16', '3/16', '5/16', '1/16')), (1, 0, 1, ('-9/16', '3/16', '5/16', '1/16')))), (1, -1, 0, ((0, 0, 0, ('9/16', '-3/16', '-5/16', '-1/16')), (0, 0, 1, ('1/8', '-3/8', '3/8', '-1/8')), (0, 1, 1, ('9/16', '-3/16', '-5/16', '-1/16')), (0, 1, 2, ('1/4', '-3/4', '3/4', '-1/4')), (1, 0, 1, ('9/16', '-3/16', '-5/16', '-1/16')), (1, 0, 2, ('1/4', '-3/4', '3/4', '-1/4')), (1, 1, 3, ('1/2', '-3/2', '3/2', '-1/2')))), (1, 1, -2, ((0, 0, 0, ('-15/16', '-11/16', '-5/16', '-1/16')), (0, 0, 1, ('3/4', '-5/4', '1/4', '1/4')), (0, 0, 2, ('-3/2', '5/2', '-1/2', '-1/2')), (0, 1, 1, ('-3/16', '5/16', '-1/16', '-1/16')), (0, 1, 2, ('3/4', '-5/4', '1/4', '1/4')), (1, 0, 1, ('-3/16', '5/16', '-1/16', '-1/16')), (1, 0, 2, ('3/4', '-5/4', '1/4', '1/4')), (1, 1, 2, ('-3/8', '5/8', '-1/8', '-1/8')))), (1, 1, 2, ((0, 0, 0, ('15/16', '11/16', '5/16', '1/16')), (0, 1, 1, ('3/16', '-5/16', '1/16', '1/16')), (1, 0, 1, ('3/16', '-5/16', '1/16', '1/16')), (1, 1, 2, ('3/8', '-5/8', '1/8', '1/8')))))},
    'gmono': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'skz', 'terms': ((-1, -1, -5, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (0, 1, 0, ('27/64', '27/32', '9/16', '5/32', '1/64')), (0, 1, 2, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (0, 2, 1, ('27/256', '-27/256', '-9/128', '5/128', '7/256', '1/256')), (0, 2, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (1, 0, 0, ('27/64', '27/32', '9/16', '5/32', '1/64')), (1, 0, 2, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (1, 1, 1, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')), (1, 1, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')), (1, 2, 2, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (2, 0, 1, ('27/256', '-27/256', '-9/128', '5/128', '7/256', '1/256')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (2, 1, 2, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')))), (-1, -1, -1, ((0, 0, 0, ('27/8', '27/4', '9/2', '5/4', '1/8')), (0, 0, 1, ('3/2', '-1', '-2', '1', '1/2')), (0, 0, 2, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (0, 1, 0, ('-81/64', '-81/32', '-27/16', '-15/32', '-3/64')), (0, 1, 2, ('-45/16', '57/16', '3/8', '-3/8', '-9/16', '-3/16')), (0, 1, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (0, 1, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (0, 2, 1, ('-81/256', '81/256', '27/128', '-15/128', '-21/256', '-3/256')), (0, 2, 2, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (0, 2, 3, ('-3/16', '11/16', '-7/8', '3/8', '1/16', '-1/16')), (0, 2, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 0, ('-81/64', '-81/32', '-27/16', '-15/32', '-3/64')), (1, 0, 2, ('-45/16', '57/16', '3/8', '-3/8', '-9/16', '-3/16')), (1, 0, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 1, 1, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (1, 1, 2, ('27/8', '-27/8', '-9/4', '5/4', '7/8', '1/8')), (1, 1, 3, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (1, 1, 4, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 2, 2, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (1, 2, 4, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (2, 0, 1, ('-81/256', '81/256', '27/128', '-15/128', '-21/256', '-3/256')), (2, 0, 2, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (2, 0, 3, ('-3/16', '11/16', '-7/8', '3/8', '1/16', '-1/16')), (2, 0, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (2, 1, 2, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (2, 1, 4, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')))), (-1, -1, 3, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 1, ('-3/2', '1', '2', '-1', '-1/2')), (0, 0, 2, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (0, 1, 0, ('81/64', '81/32', '27/16', '15/32', '3/64')), (0, 1, 2, ('9/32', '-33/32', '21/16', '-9/16', '-3/32', '3/32')), (0, 1, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (0, 2, 1, ('81/256', '-81/256', '-27/128', '15/128', '21/256', '3/256')), (0, 2, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (0, 2, 3, ('3/16', '-11/16', '7/8', '-3/8', '-1/16', '1/16')), (1, 0, 0, ('81/64', '81/32', '27/16', '15/32', '3/64')), (1, 0, 2, ('9/32', '-33/32', '21/16', '-9/16', '-3/32', '3/32')), (1, 0, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 1, 1, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (1, 1, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')), (1, 1, 3, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')), (1, 1, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 2, 2, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (1, 2, 4, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')), (2, 0, 1, ('81/256', '-81/256', '-27/128', '15/128', '21/256', '3/256')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (2, 0, 3, ('3/16', '-11/16', '7/8', '-3/8', '-1/16', '1/16')), (2, 1, 2, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (2, 1, 4, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')))), (-1, -1, 7, ((0, 1, 0, ('-27/64', '-27/32', '-9/16', '-5/32', '-1/64')), (0, 2, 1, ('-27/256', '27/256', '9/128', '-5/128', '-7/256', '-1/256')), (1, 0, 0, ('-27/64', '-27/32', '-9/16', '-5/32', '-1/64')), (1, 1, 1, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (1, 2, 2, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')), (2, 0, 1, ('-27/256', '27/256', '9/128', '-5/128', '-7/256', '-1/256')), (2, 1, 2, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')))), (-1, 1, -7, ((0, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')), (0, 1, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (0, 2, 1, ('81/256', '27/256', '-27/128', '-21/128', '-11/256', '-1/256')), (1, 0, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (1, 1, 1, ('81/128', '27/128', '-27/64', '-21/64', '-11/128', '-1/128')), (2, 0, 1, ('81/256', '27/256', '-27/128', '-21/128', '-11/256', '-1/256')))), (-1, 1, -3, ((0, 0, 0, ('-9/16', '-3/8', '1/2', '3/8', '1/16')), (0, 0, 1, ('117/64', '159/64', '-79/32', '-57/32', '-7/64', '3/64')), (0, 0, 3, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (0, 1, 1, ('135/64', '9/64', '-33/32', '-27/32', '-21/64', '-3/64')), (0, 1, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (0, 2, 1, ('-243/256', '-81/256', '81/128', '63/128', '33/256', '3/256')), (0, 2, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (0, 2, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('135/64', '9/64', '-33/32', '-27/32', '-21/64', '-3/64')), (1, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 1, 1, ('-243/128', '-81/128', '81/64', '63/64', '33/128', '3/128')), (1, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 1, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 2, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 1, ('-243/256', '-81/256', '81/128', '63/128', '33/256', '3/256')), (2, 0, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 1, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))), (-1, 1, 1, ((0, 0, 0, ('9/8', '3/4', '-1', '-3/4', '-1/8')), (0, 0, 1, ('-189/64', '-207/64', '111/32', '81/32', '15/64', '-3/64')), (0, 0, 2, ('-1', '2', '0', '-2', '1')), (0, 0, 3, ('-1/4', '5/4', '-5/2', '5/2', '-5/4', '1/4')), (0, 1, 1, ('-27/64', '63/64', '-15/32', '-9/32', '9/64', '3/64')), (0, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (0, 1, 3, ('-1', '2', '0', '-2', '1')), (0, 1, 4, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (0, 2, 1, ('243/256', '81/256', '-81/128', '-63/128', '-33/256', '-3/256')), (0, 2, 2, ('9/32', '-21/32', '5/16', '3/16', '-3/32', '-1/32')), (0, 2, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (0, 2, 4, ('1/4', '-5/4', '5/2', '-5/2', '5/4', '-1/4')), (1, 0, 1, ('-27/64', '63/64', '-15/32', '-9/32', '9/64', '3/64')), (1, 0, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 0, 3, ('-1', '2', '0', '-2', '1')), (1, 0, 4, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (1, 1, 1, ('243/128', '81/128', '-81/64', '-63/64', '-33/128', '-3/128')), (1, 1, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')), (1, 1, 5, ('-1', '5', '-10', '10', '-5', '1')), (1, 2, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 2, 5, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')), (2, 0, 1, ('243/256', '81/256', '-81/128', '-63/128', '-33/256', '-3/256')), (2, 0, 2, ('9/32', '-21/32', '5/16', '3/16', '-3/32', '-1/32')), (2, 0, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 0, 4, ('1/4', '-5/4', '5/2', '-5/2', '5/4', '-1/4')), (2, 1, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 1, 5, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')))), (-1, 1, 5, ((0, 0, 0, ('-9/16', '-3/8', '1/2', '3/8', '1/16')), (0, 0, 1, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (0, 1, 1, ('-27/64', '-45/64', '21/32', '15/32', '1/64', '-1/64')), (0, 1, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (0, 2, 1, ('-81/256', '-27/256', '27/128', '21/128', '11/256', '1/256')), (0, 2, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (1, 0, 1, ('-27/64', '-45/64', '21/32', '15/32', '1/64', '-1/64')), (1, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 1, 1, ('-81/128', '-27/128', '27/64', '21/64', '11/128', '1/128')), (1, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 1, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 2, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 1, ('-81/256', '-27/256', '27/128', '21/128', '11/256', '1/256')), (2, 0, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (2, 1, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))), (1, -1, -7, ((0, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')), (0, 1, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (0, 2, 1, ('81/256', '27/256', '-27/128', '-21/128', '-11/256', '-1/256')), (1, 0, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (1, 1, 1, ('81/128', '27/128', '-27/64', '-21/64', '-11/128', '-1/128')), (2, 0, 1, ('81/256', '27/256', '-27/128', '-21/128', '-11/256', '-1/256')))), (1, -1, -3, ((0, 0, 0, ('-9/16', '-3/8', '1/2', '3/8', '1/16')), (0, 0, 1, ('117/64', '159/64', '-79/32', '-57/32', '-7/64', '3/64')), (0, 0, 3, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (0, 1, 1, ('135/64', '9/64', '-33/32', '-27/32', '-21/64', '-3/64')), (0, 1, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (0, 2, 1, ('-243/256', '-81/256', '81/128', '63/128', '33/256', '3/256')), (0, 2, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (0, 2, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('135/64', '9/64', '-33/32', '-27/32', '-21/64', '-3/64')), (1, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 1, 1, ('-243/128', '-81/128', '81/64', '63/64', '33/128', '3/128')), (1, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 1, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 2, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 1, ('-243/256', '-81/256', '81/128', '63/128', '33/256', '3/256')), (2, 0, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 1, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))), (1, -1, 1, ((0, 0, 0, ('9/8', '3/4', '-1', '-3/4', '-1/8')), (0, 0, 1, ('-189/64', '-207/64', '111/32', '81/32', '15/64', '-3/64')), (0, 0, 2, ('-1', '2', '0', '-2', '1')), (0, 0, 3, ('-1/4', '5/4', '-5/2', '5/2', '-5/4', '1/4')), (0, 1, 1, ('-27/64', '63/64', '-15/32', '-9/32', '9/64', '3/64')), (0, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (0, 1, 3, ('-1', '2', '0', '-2', '1')), (0, 1, 4, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (0, 2, 1, ('243/256', '81/256', '-81/128', '-63/128', '-33/256', '-3/256')), (0, 2, 2, ('9/32', '-21/32', '5/16', '3/16', '-3/32', '-1/32')), (0, 2, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (0, 2, 4, ('1/4', '-5/4', '5/2', '-5/2', '5/4', '-1/4')), (1, 0, 1, ('-27/64', '63/64', '-15/32', '-9/32', '9/64', '3/64')), (1, 0, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 0, 3, ('-1', '2', '0', '-2', '1')), (1, 0, 4, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (1, 1, 1, ('243/128', '81/128', '-81/64', '-63/64', '-33/128', '-3/128')), (1, 1, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')), (1, 1, 5, ('-1', '5', '-10', '10', '-5', '1')), (1, 2, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 2, 5, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')), (2, 0, 1, ('243/256', '81/256', '-81/128', '-63/128', '-33/256', '-3/256')), (2, 0, 2, ('9/32', '-21/32', '5/16', '3/16', '-3/32', '-1/32')), (2, 0, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 0, 4, ('1/4', '-5/4', '5/2', '-5/2', '5/4', '-1/4')), (2, 1, 3, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 1, 5, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')))), (1, -1, 5, ((0, 0, 0, ('-9/16', '-3/8', '1/2', '3/8', '1/16')), (0, 0, 1, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (0, 1, 1, ('-27/64', '-45/64', '21/32', '15/32', '1/64', '-1/64')), (0, 1, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (0, 2, 1, ('-81/256', '-27/256', '27/128', '21/128', '11/256', '1/256')), (0, 2, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (1, 0, 1, ('-27/64', '-45/64', '21/32', '15/32', '1/64', '-1/64')), (1, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 1, 1, ('-81/128', '-27/128', '27/64', '21/64', '11/128', '1/128')), (1, 1, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (1, 1, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 2, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 1, ('-81/256', '-27/256', '27/128', '21/128', '11/256', '1/256')), (2, 0, 2, ('-9/64', '21/64', '-5/32', '-3/32', '3/64', '1/64')), (2, 1, 3, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))), (1, 1, -5, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (0, 1, 0, ('27/64', '27/32', '9/16', '5/32', '1/64')), (0, 1, 2, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (0, 2, 1, ('27/256', '-27/256', '-9/128', '5/128', '7/256', '1/256')), (0, 2, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (1, 0, 0, ('27/64', '27/32', '9/16', '5/32', '1/64')), (1, 0, 2, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (1, 1, 1, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')), (1, 1, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')), (1, 2, 2, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (2, 0, 1, ('27/256', '-27/256', '-9/128', '5/128', '7/256', '1/256')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (2, 1, 2, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')))), (1, 1, -1, ((0, 0, 0, ('27/8', '27/4', '9/2', '5/4', '1/8')), (0, 0, 1, ('3/2', '-1', '-2', '1', '1/2')), (0, 0, 2, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (0, 1, 0, ('-81/64', '-81/32', '-27/16', '-15/32', '-3/64')), (0, 1, 2, ('-45/16', '57/16', '3/8', '-3/8', '-9/16', '-3/16')), (0, 1, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (0, 1, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (0, 2, 1, ('-81/256', '81/256', '27/128', '-15/128', '-21/256', '-3/256')), (0, 2, 2, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (0, 2, 3, ('-3/16', '11/16', '-7/8', '3/8', '1/16', '-1/16')), (0, 2, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 0, ('-81/64', '-81/32', '-27/16', '-15/32', '-3/64')), (1, 0, 2, ('-45/16', '57/16', '3/8', '-3/8', '-9/16', '-3/16')), (1, 0, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 1, 1, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (1, 1, 2, ('27/8', '-27/8', '-9/4', '5/4', '7/8', '1/8')), (1, 1, 3, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (1, 1, 4, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 2, 2, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (1, 2, 4, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (2, 0, 1, ('-81/256', '81/256', '27/128', '-15/128', '-21/256', '-3/256')), (2, 0, 2, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (2, 0, 3, ('-3/16', '11/16', '-7/8', '3/8', '1/16', '-1/16')), (2, 0, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (2, 1, 2, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (2, 1, 4, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')))), (1, 1, 3, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 1, ('-3/2', '1', '2', '-1', '-1/2')), (0, 0, 2, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (0, 1, 0, ('81/64', '81/32', '27/16', '15/32', '3/64')), (0, 1, 2, ('9/32', '-33/32', '21/16', '-9/16', '-3/32', '3/32')), (0, 1, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (0, 2, 1, ('81/256', '-81/256', '-27/128', '15/128', '21/256', '3/256')), (0, 2, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (0, 2, 3, ('3/16', '-11/16', '7/8', '-3/8', '-1/16', '1/16')), (1, 0, 0, ('81/64', '81/32', '27/16', '15/32', '3/64')), (1, 0, 2, ('9/32', '-33/32', '21/16', '-9/16', '-3/32', '3/32')), (1, 0, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 1, 1, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (1, 1, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')), (1, 1, 3, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')), (1, 1, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 2, 2, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (1, 2, 4, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')), (2, 0, 1, ('81/256', '-81/256', '-27/128', '15/128', '21/256', '3/256')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (2, 0, 3, ('3/16', '-11/16', '7/8', '-3/8', '-1/16', '1/16')), (2, 1, 2, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (2, 1, 4, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')))), (1, 1, 7, ((0, 1, 0, ('-27/64', '-27/32', '-9/16', '-5/32', '-1/64')), (0, 2, 1, ('-27/256', '27/256', '9/128', '-5/128', '-7/256', '-1/256')), (1, 0, 0, ('-27/64', '-27/32', '-9/16', '-5/32', '-1/64')), (1, 1, 1, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (1, 2, 2, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')), (2, 0, 1, ('-27/256', '27/256', '9/128', '-5/128', '-7/256', '-1/256')), (2, 1, 2, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')))))},
    'dis1_p': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'kz', 'terms': ((-1, 0, -3, ((0, 0, 0, ('-9/8', '-3/4', '-1/8')),)), (-1, 0, 1, ((0, 0, 0, ('9/8', '3/4', '1/8')), (0, 0, 1, ('1/2', '-1', '1/2')), (1, 0, 2, ('1', '-2', '1')))), (1, 0, -1, ((0, 0, 0, ('-3/8', '1/4', '1/8')), (0, 0, 1, ('3/2', '-1', '-1/2')), (1, 0, 1, ('-3/4', '1/2', '1/4')))), (1, 0, 3, ((0, 0, 0, ('3/8', '-1/4', '-1/8')), (1, 0, 1, ('3/4', '-1/2', '-1/4')))))},
    'dis1_m': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'kz', 'terms': ((-1, 0, -1, ((0, 0, 0, ('-3/8', '1/4', '1/8')), (0, 0, 1, ('3/2', '-1', '-1/2')), (1, 0, 1, ('-3/4', '1/2', '1/4')))), (-1, 0, 3, ((0, 0, 0, ('3/8', '-1/4', '-1/8')), (1, 0, 1, ('3/4', '-1/2', '-1/4')))), (1, 0, -3, ((0, 0, 0, ('-9/8', '-3/4', '-1/8')),)), (1, 0, 1, ((0, 0, 0, ('9/8', '3/4', '1/8')), (0, 0, 1, ('1/2', '-1', '1/2')), (1, 0, 2, ('1', '-2', '1')))))},
    'dis8_p': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((-1, 0, -7, ((0, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (1, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')))), (-1, 0, -3, ((0, 0, 1, ('135/32', '9/32', '-33/16', '-27/16', '-21/32', '-3/32')), (0, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('-243/64', '-81/64', '81/32', '63/32', '33/64', '3/64')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))), (-1, 0, 1, ((0, 0, 1, ('-27/32', '63/32', '-15/16', '-9/16', '9/32', '3/32')), (0, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (0, 0, 3, ('-2', '4', '0', '-4', '2')), (0, 0, 4, ('-1', '5', '-10', '10', '-5', '1')), (1, 0, 1, ('243/64', '81/64', '-81/32', '-63/32', '-33/64', '-3/64')), (1, 0, 2, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')), (1, 0, 5, ('-2', '10', '-20', '20', '-10', '2')), (2, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 5, ('1', '-5', '10', '-10', '5', '-1')))), (-1, 0, 5, ((0, 0, 1, ('-27/32', '-45/32', '21/16', '15/16', '1/32', '-1/32')), (0, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))), (1, 0, -5, ((0, 0, 0, ('27/32', '27/16', '9/8', '5/16', '1/32')), (0, 0, 2, ('81/16', '-81/16', '-27/8', '15/8', '21/16', '3/16')), (1, 0, 1, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (1, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (2, 0, 2, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')))), (1, 0, -1, ((0, 0, 0, ('-81/32', '-81/16', '-27/8', '-15/16', '-3/32')), (0, 0, 2, ('-45/8', '57/8', '3/4', '-3/4', '-9/8', '-3/8')), (0, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (0, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (1, 0, 1, ('81/64', '-81/64', '-27/32', '15/32', '21/64', '3/64')), (1, 0, 2, ('27/4', '-27/4', '-9/2', '5/2', '7/4', '1/4')), (1, 0, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 0, 4, ('3', '-11', '14', '-6', '-1', '1')), (2, 0, 2, ('-81/64', '81/64', '27/32', '-15/32', '-21/64', '-3/64')), (2, 0, 4, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')))), (1, 0, 3, ((0, 0, 0, ('81/32', '81/16', '27/8', '15/16', '3/32')), (0, 0, 2, ('9/16', '-33/16', '21/8', '-9/8', '-3/16', '3/16')), (0, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 0, 1, ('-81/64', '81/64', '27/32', '-15/32', '-21/64', '-3/64')), (1, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (1, 0, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (2, 0, 2, ('81/64', '-81/64', '-27/32', '15/32', '21/64', '3/64')), (2, 0, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')))), (1, 0, 7, ((0, 0, 0, ('-27/32', '-27/16', '-9/8', '-5/16', '-1/32')), (1, 0, 1, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')))))},
    'dis8_m': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((-1, 0, -5, ((0, 0, 0, ('27/32', '27/16', '9/8', '5/16', '1/32')), (0, 0, 2, ('81/16', '-81/16', '-27/8', '15/8', '21/16', '3/16')), (1, 0, 1, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (1, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (2, 0, 2, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')))), (-1, 0, -1, ((0, 0, 0, ('-81/32', '-81/16', '-27/8', '-15/16', '-3/32')), (0, 0, 2, ('-45/8', '57/8', '3/4', '-3/4', '-9/8', '-3/8')), (0, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (0, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (1, 0, 1, ('81/64', '-81/64', '-27/32', '15/32', '21/64', '3/64')), (1, 0, 2, ('27/4', '-27/4', '-9/2', '5/2', '7/4', '1/4')), (1, 0, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 0, 4, ('3', '-11', '14', '-6', '-1', '1')), (2, 0, 2, ('-81/64', '81/64', '27/32', '-15/32', '-21/64', '-3/64')), (2, 0, 4, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')))), (-1, 0, 3, ((0, 0, 0, ('81/32', '81/16', '27/8', '15/16', '3/32')), (0, 0, 2, ('9/16', '-33/16', '21/8', '-9/8', '-3/16', '3/16')), (0, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 0, 1, ('-81/64', '81/64', '27/32', '-15/32', '-21/64', '-3/64')), (1, 0, 2, ('-27/8', '27/8', '9/4', '-5/4', '-7/8', '-1/8')), (1, 0, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')), (1, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (2, 0, 2, ('81/64', '-81/64', '-27/32', '15/32', '21/64', '3/64')), (2, 0, 4, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')))), (-1, 0, 7, ((0, 0, 0, ('-27/32', '-27/16', '-9/8', '-5/16', '-1/32')), (1, 0, 1, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')), (2, 0, 2, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')))), (1, 0, -7, ((0, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (1, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')))), (1, 0, -3, ((0, 0, 1, ('135/32', '9/32', '-33/16', '-27/16', '-21/32', '-3/32')), (0, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('-243/64', '-81/64', '81/32', '63/32', '33/64', '3/64')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))), (1, 0, 1, ((0, 0, 1, ('-27/32', '63/32', '-15/16', '-9/16', '9/32', '3/32')), (0, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (0, 0, 3, ('-2', '4', '0', '-4', '2')), (0, 0, 4, ('-1', '5', '-10', '10', '-5', '1')), (1, 0, 1, ('243/64', '81/64', '-81/32', '-63/32', '-33/64', '-3/64')), (1, 0, 2, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')), (1, 0, 5, ('-2', '10', '-20', '20', '-10', '2')), (2, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 5, ('1', '-5', '10', '-10', '5', '-1')))), (1, 0, 5, ((0, 0, 1, ('-27/32', '-45/32', '21/16', '15/16', '1/32', '-1/32')), (0, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (1, 0, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')), (2, 0, 3, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))))},
    'dis0_p': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((-1, 0, -7, ((0, 0, 1, ('81/32', '27/32', '-27/16', '-21/16', '-11/32', '-1/32')), (1, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (2, 0, 1, ('81/128', '27/128', '-27/64', '-21/64', '-11/128', '-1/128')))), (-1, 0, -3, ((0, 0, 0, ('-9/8', '-3/4', '1', '3/4', '1/8')), (0, 0, 1, ('117/32', '159/32', '-79/16', '-57/16', '-7/32', '3/32')), (0, 0, 3, ('9/2', '-21/2', '5', '3', '-3/2', '-1/2')), (1, 0, 1, ('135/32', '9/32', '-33/16', '-27/16', '-21/32', '-3/32')), (1, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 0, 1, ('-243/128', '-81/128', '81/64', '63/64', '33/128', '3/128')), (2, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))), (-1, 0, 1, ((0, 0, 0, ('9/4', '3/2', '-2', '-3/2', '-1/4')), (0, 0, 1, ('-189/32', '-207/32', '111/16', '81/16', '15/32', '-3/32')), (0, 0, 2, ('-2', '4', '0', '-4', '2')), (0, 0, 3, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (1, 0, 1, ('-27/32', '63/32', '-15/16', '-9/16', '9/32', '3/32')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('-2', '4', '0', '-4', '2')), (1, 0, 4, ('-1', '5', '-10', '10', '-5', '1')), (2, 0, 1, ('243/128', '81/128', '-81/64', '-63/64', '-33/128', '-3/128')), (2, 0, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 4, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')))), (-1, 0, 5, ((0, 0, 0, ('-9/8', '-3/4', '1', '3/4', '1/8')), (0, 0, 1, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 0, 1, ('-27/32', '-45/32', '21/16', '15/16', '1/32', '-1/32')), (1, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 0, 1, ('-81/128', '-27/128', '27/64', '21/64', '11/128', '1/128')), (2, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))), (1, 0, -5, ((0, 0, 0, ('-27/8', '-27/4', '-9/2', '-5/4', '-1/8')), (0, 0, 2, ('-27/4', '27/4', '9/2', '-5/2', '-7/4', '-1/4')), (1, 0, 0, ('27/32', '27/16', '9/8', '5/16', '1/32')), (1, 0, 2, ('81/16', '-81/16', '-27/8', '15/8', '21/16', '3/16')), (2, 0, 1, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (2, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')))), (1, 0, -1, ((0, 0, 0, ('27/4', '27/2', '9', '5/2', '1/4')), (0, 0, 1, ('3', '-2', '-4', '2', '1')), (0, 0, 2, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 0, 0, ('-81/32', '-81/16', '-27/8', '-15/16', '-3/32')), (1, 0, 2, ('-45/8', '57/8', '3/4', '-3/4', '-9/8', '-3/8')), (1, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (2, 0, 1, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (2, 0, 2, ('27/16', '-27/16', '-9/8', '5/8', '7/16', '1/16')), (2, 0, 3, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (2, 0, 4, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')))), (1, 0, 3, ((0, 0, 0, ('-27/8', '-27/4', '-9/2', '-5/4', '-1/8')), (0, 0, 1, ('-3', '2', '4', '-2', '-1')), (0, 0, 2, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 0, 0, ('81/32', '81/16', '27/8', '15/16', '3/32')), (1, 0, 2, ('9/16', '-33/16', '21/8', '-9/8', '-3/16', '3/16')), (1, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (2, 0, 1, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (2, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (2, 0, 3, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')))), (1, 0, 7, ((1, 0, 0, ('-27/32', '-27/16', '-9/8', '-5/16', '-1/32')), (2, 0, 1, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')))))},
    'dis0_m': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((-1, 0, -5, ((0, 0, 0, ('-27/8', '-27/4', '-9/2', '-5/4', '-1/8')), (0, 0, 2, ('-27/4', '27/4', '9/2', '-5/2', '-7/4', '-1/4')), (1, 0, 0, ('27/32', '27/16', '9/8', '5/16', '1/32')), (1, 0, 2, ('81/16', '-81/16', '-27/8', '15/8', '21/16', '3/16')), (2, 0, 1, ('27/128', '-27/128', '-9/64', '5/64', '7/128', '1/128')), (2, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')))), (-1, 0, -1, ((0, 0, 0, ('27/4', '27/2', '9', '5/2', '1/4')), (0, 0, 1, ('3', '-2', '-4', '2', '1')), (0, 0, 2, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 0, 0, ('-81/32', '-81/16', '-27/8', '-15/16', '-3/32')), (1, 0, 2, ('-45/8', '57/8', '3/4', '-3/4', '-9/8', '-3/8')), (1, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (2, 0, 1, ('-81/128', '81/128', '27/64', '-15/64', '-21/128', '-3/128')), (2, 0, 2, ('27/16', '-27/16', '-9/8', '5/8', '7/16', '1/16')), (2, 0, 3, ('-3/8', '11/8', '-7/4', '3/4', '1/8', '-1/8')), (2, 0, 4, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')))), (-1, 0, 3, ((0, 0, 0, ('-27/8', '-27/4', '-9/2', '-5/4', '-1/8')), (0, 0, 1, ('-3', '2', '4', '-2', '-1')), (0, 0, 2, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (1, 0, 0, ('81/32', '81/16', '27/8', '15/16', '3/32')), (1, 0, 2, ('9/16', '-33/16', '21/8', '-9/8', '-3/16', '3/16')), (1, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (2, 0, 1, ('81/128', '-81/128', '-27/64', '15/64', '21/128', '3/128')), (2, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (2, 0, 3, ('3/8', '-11/8', '7/4', '-3/4', '-1/8', '1/8')))), (-1, 0, 7, ((1, 0, 0, ('-27/32', '-27/16', '-9/8', '-5/16', '-1/32')), (2, 0, 1, ('-27/128', '27/128', '9/64', '-5/64', '-7/128', '-1/128')))), (1, 0, -7, ((0, 0, 1, ('81/32', '27/32', '-27/16', '-21/16', '-11/32', '-1/32')), (1, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (2, 0, 1, ('81/128', '27/128', '-27/64', '-21/64', '-11/128', '-1/128')))), (1, 0, -3, ((0, 0, 0, ('-9/8', '-3/4', '1', '3/4', '1/8')), (0, 0, 1, ('117/32', '159/32', '-79/16', '-57/16', '-7/32', '3/32')), (0, 0, 3, ('9/2', '-21/2', '5', '3', '-3/2', '-1/2')), (1, 0, 1, ('135/32', '9/32', '-33/16', '-27/16', '-21/32', '-3/32')), (1, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 0, 1, ('-243/128', '-81/128', '81/64', '63/64', '33/128', '3/128')), (2, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (2, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))), (1, 0, 1, ((0, 0, 0, ('9/4', '3/2', '-2', '-3/2', '-1/4')), (0, 0, 1, ('-189/32', '-207/32', '111/16', '81/16', '15/32', '-3/32')), (0, 0, 2, ('-2', '4', '0', '-4', '2')), (0, 0, 3, ('-1/2', '5/2', '-5', '5', '-5/2', '1/2')), (1, 0, 1, ('-27/32', '63/32', '-15/16', '-9/16', '9/32', '3/32')), (1, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 3, ('-2', '4', '0', '-4', '2')), (1, 0, 4, ('-1', '5', '-10', '10', '-5', '1')), (2, 0, 1, ('243/128', '81/128', '-81/64', '-63/64', '-33/128', '-3/128')), (2, 0, 2, ('9/16', '-21/16', '5/8', '3/8', '-3/16', '-1/16')), (2, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 4, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')))), (1, 0, 5, ((0, 0, 0, ('-9/8', '-3/4', '1', '3/4', '1/8')), (0, 0, 1, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')), (1, 0, 1, ('-27/32', '-45/32', '21/16', '15/16', '1/32', '-1/32')), (1, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 0, 1, ('-81/128', '-27/128', '27/64', '21/64', '11/128', '1/128')), (2, 0, 2, ('-9/32', '21/32', '-5/16', '-3/16', '3/32', '1/32')))))},
    'chi_p': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((0, 0, -5, ((0, 0, 0, ('27/16', '27/8', '9/4', '5/8', '1/16')), (0, 0, 1, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (0, 0, 2, ('135/32', '-135/32', '-45/16', '25/16', '35/32', '5/32')), (1, 0, 1, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (1, 0, 2, ('81/16', '-81/16', '-27/8', '15/8', '21/16', '3/16')), (2, 0, 2, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')))), (0, 0, -1, ((0, 0, 0, ('-81/16', '-81/8', '-27/4', '-15/8', '-3/16')), (0, 0, 1, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (0, 0, 2, ('-9/32', '105/32', '-93/16', '41/16', '19/32', '-11/32')), (0, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (0, 0, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 0, 1, ('-81/32', '81/32', '27/16', '-15/16', '-21/32', '-3/32')), (1, 0, 2, ('-135/16', '135/16', '45/8', '-25/8', '-35/16', '-5/16')), (1, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (1, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (2, 0, 2, ('-81/32', '81/32', '27/16', '-15/16', '-21/32', '-3/32')), (2, 0, 4, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')))), (0, 0, 3, ((0, 0, 0, ('81/16', '81/8', '27/4', '15/8', '3/16')), (0, 0, 1, ('-81/32', '81/32', '27/16', '-15/16', '-21/32', '-3/32')), (0, 0, 2, ('-99/32', '3/32', '129/16', '-61/16', '-47/32', '7/32')), (0, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (0, 0, 4, ('-9/2', '33/2', '-21', '9', '3/2', '-3/2')), (1, 0, 1, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (1, 0, 2, ('27/16', '-27/16', '-9/8', '5/8', '7/16', '1/16')), (1, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (1, 0, 4, ('3', '-11', '14', '-6', '-1', '1')), (2, 0, 2, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (2, 0, 4, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')))), (0, 0, 7, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 1, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (0, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (1, 0, 1, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (1, 0, 2, ('27/16', '-27/16', '-9/8', '5/8', '7/16', '1/16')), (2, 0, 2, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')))))},
    'chi_m': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((0, 0, -7, ((0, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (1, 0, 1, ('81/32', '27/32', '-27/16', '-21/16', '-11/32', '-1/32')))), (0, 0, -3, ((0, 0, 1, ('27/32', '-63/32', '15/16', '9/16', '-9/32', '-3/32')), (0, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (0, 0, 3, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (1, 0, 1, ('-243/32', '-81/32', '81/16', '63/16', '33/32', '3/32')), (1, 0, 2, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (2, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))), (0, 0, 1, ((0, 0, 1, ('189/32', '207/32', '-111/16', '-81/16', '-15/32', '3/32')), (0, 0, 2, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')), (0, 0, 3, ('-7/4', '11/4', '5/2', '-13/2', '13/4', '-1/4')), (0, 0, 4, ('-2', '10', '-20', '20', '-10', '2')), (0, 0, 5, ('-2', '10', '-20', '20', '-10', '2')), (1, 0, 1, ('243/32', '81/32', '-81/16', '-63/16', '-33/32', '-3/32')), (1, 0, 2, ('-9/2', '21/2', '-5', '-3', '3/2', '1/2')), (1, 0, 3, ('9/2', '-21/2', '5', '3', '-3/2', '-1/2')), (2, 0, 3, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (2, 0, 5, ('2', '-10', '20', '-20', '10', '-2')))), (0, 0, 5, ((0, 0, 1, ('-135/32', '-117/32', '69/16', '51/16', '13/32', '-1/32')), (0, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (0, 0, 3, ('-27/8', '63/8', '-15/4', '-9/4', '9/8', '3/8')), (1, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (1, 0, 2, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (1, 0, 3, ('-9/2', '21/2', '-5', '-3', '3/2', '1/2')), (2, 0, 3, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))))},
    'xi_p': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((0, 0, -5, ((0, 0, 0, ('-81/16', '-81/8', '-27/4', '-15/8', '-3/16')), (0, 0, 1, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')), (0, 0, 2, ('-81/16', '81/16', '27/8', '-15/8', '-21/16', '-3/16')), (1, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (1, 0, 1, ('-27/32', '27/32', '9/16', '-5/16', '-7/32', '-1/32')), (1, 0, 2, ('-27/4', '27/4', '9/2', '-5/2', '-7/4', '-1/4')), (2, 0, 1, ('27/64', '-27/64', '-9/32', '5/32', '7/64', '1/64')), (2, 0, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')))), (0, 0, -1, ((0, 0, 0, ('135/16', '135/8', '45/4', '25/8', '5/16')), (0, 0, 1, ('303/64', '-175/64', '-229/32', '113/32', '107/64', '-3/64')), (0, 0, 2, ('-39/8', '-1/8', '53/4', '-25/4', '-19/8', '3/8')), (0, 0, 3, ('9/4', '-33/4', '21/2', '-9/2', '-3/4', '3/4')), (0, 0, 4, ('-3', '11', '-14', '6', '1', '-1')), (1, 0, 0, ('81/16', '81/8', '27/4', '15/8', '3/16')), (1, 0, 1, ('81/32', '-81/32', '-27/16', '15/16', '21/32', '3/32')), (1, 0, 2, ('9/2', '-15/2', '3', '-1', '1/2', '1/2')), (1, 0, 3, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')), (2, 0, 1, ('-81/64', '81/64', '27/32', '-15/32', '-21/64', '-3/64')), (2, 0, 2, ('27/8', '-27/8', '-9/4', '5/4', '7/8', '1/8')), (2, 0, 3, ('-3/4', '11/4', '-7/2', '3/2', '1/4', '-1/4')), (2, 0, 4, ('3', '-11', '14', '-6', '-1', '1')))), (0, 0, 3, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 1, ('-303/64', '175/64', '229/32', '-113/32', '-107/64', '3/64')), (0, 0, 2, ('-33/16', '49/16', '-5/8', '1/8', '-5/16', '-3/16')), (0, 0, 3, ('-9/4', '33/4', '-21/2', '9/2', '3/4', '-3/4')), (1, 0, 0, ('-81/16', '-81/8', '-27/4', '-15/8', '-3/16')), (1, 0, 1, ('-81/32', '81/32', '27/16', '-15/16', '-21/32', '-3/32')), (1, 0, 2, ('9/4', '3/4', '-15/2', '7/2', '5/4', '-1/4')), (1, 0, 3, ('3/2', '-11/2', '7', '-3', '-1/2', '1/2')), (2, 0, 1, ('81/64', '-81/64', '-27/32', '15/32', '21/64', '3/64')), (2, 0, 2, ('-27/16', '27/16', '9/8', '-5/8', '-7/16', '-1/16')), (2, 0, 3, ('3/4', '-11/4', '7/2', '-3/2', '-1/4', '1/4')))), (0, 0, 7, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 1, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')), (1, 0, 0, ('27/16', '27/8', '9/4', '5/8', '1/16')), (1, 0, 1, ('27/32', '-27/32', '-9/16', '5/16', '7/32', '1/32')), (2, 0, 1, ('-27/64', '27/64', '9/32', '-5/32', '-7/64', '-1/64')))))},
    'xi_m': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'kz', 'terms': ((0, 0, -7, ((0, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')), (1, 0, 1, ('-81/32', '-27/32', '27/16', '21/16', '11/32', '1/32')), (2, 0, 1, ('81/64', '27/64', '-27/32', '-21/32', '-11/64', '-1/64')))), (0, 0, -3, ((0, 0, 0, ('-9/4', '-3/2', '2', '3/2', '1/4')), (0, 0, 1, ('765/64', '591/64', '-367/32', '-273/32', '-79/64', '3/64')), (0, 0, 2, ('-27/16', '63/16', '-15/8', '-9/8', '9/16', '3/16')), (0, 0, 3, ('27/4', '-63/4', '15/2', '9/2', '-9/4', '-3/4')), (1, 0, 1, ('27/32', '-63/32', '15/16', '9/16', '-9/32', '-3/32')), (1, 0, 2, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')), (1, 0, 3, ('-9/2', '21/2', '-5', '-3', '3/2', '1/2')), (2, 0, 1, ('-243/64', '-81/64', '81/32', '63/32', '33/64', '3/64')), (2, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')), (2, 0, 3, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')))), (0, 0, 1, ((0, 0, 0, ('9/2', '3', '-4', '-3', '-1/2')), (0, 0, 1, ('-621/64', '-495/64', '303/32', '225/32', '63/64', '-3/64')), (0, 0, 2, ('-5/8', '1/8', '15/4', '-23/4', '23/8', '-3/8')), (0, 0, 3, ('-11/4', '31/4', '-15/2', '7/2', '-7/4', '3/4')), (0, 0, 4, ('-1', '5', '-10', '10', '-5', '1')), (1, 0, 1, ('189/32', '207/32', '-111/16', '-81/16', '-15/32', '3/32')), (1, 0, 2, ('9/2', '-21/2', '5', '3', '-3/2', '-1/2')), (1, 0, 3, ('1/2', '-5/2', '5', '-5', '5/2', '-1/2')), (2, 0, 1, ('243/64', '81/64', '-81/32', '-63/32', '-33/64', '-3/64')), (2, 0, 2, ('9/8', '-21/8', '5/4', '3/4', '-3/8', '-1/8')), (2, 0, 3, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (2, 0, 4, ('1', '-5', '10', '-10', '5', '-1')))), (0, 0, 5, ((0, 0, 0, ('-9/4', '-3/2', '2', '3/2', '1/4')), (0, 0, 1, ('-225/64', '-123/64', '91/32', '69/32', '27/64', '1/64')), (0, 0, 2, ('-27/16', '63/16', '-15/8', '-9/8', '9/16', '3/16')), (1, 0, 1, ('-135/32', '-117/32', '69/16', '51/16', '13/32', '-1/32')), (1, 0, 2, ('-9/4', '21/4', '-5/2', '-3/2', '3/4', '1/4')), (2, 0, 1, ('-81/64', '-27/64', '27/32', '21/32', '11/64', '1/64')), (2, 0, 2, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))))},
    'ineq1_p': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 0, ('-3/2', '-1/2')),)), (0, 0, 2, ((0, 0, 0, ('3/2', '1/2')),)))},
    'ineq1_m': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, 0, ((0, 0, 1, ('2', '-2')),)),)},
    'ineq2_p': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -4, ((0, 0, 0, ('9/8', '3/4', '1/8')),)), (0, 0, 0, ((0, 0, 0, ('-9/4', '-3/2', '-1/4')), (0, 0, 2, ('2', '-4', '2')))), (0, 0, 4, ((0, 0, 0, ('9/8', '3/4', '1/8')),)))},
    'ineq2_m': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 1, ('-3', '2', '1')),)), (0, 0, 2, ((0, 0, 1, ('3', '-2', '-1')),)))},
    'af_alpha': {'a': 0, 'b': 0, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 0, ('-3', '-1')),)), (0, 0, 0, ((0, 0, 0, ('1', '-1')), (0, 0, 1, ('-2', '2')))))},
    'af_p': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -6, ((0, 0, 0, ('-27/8', '-27/8', '-9/8', '-1/8')),)), (0, 0, -2, ((0, 0, 0, ('27/4', '27/4', '9/4', '1/4')), (0, 0, 1, ('-3', '5', '-1', '-1')))), (0, 0, 2, ((0, 0, 0, ('-27/8', '-27/8', '-9/8', '-1/8')), (0, 0, 1, ('3', '-5', '1', '1')), (0, 0, 2, ('-6', '10', '-2', '-2')))))},
    'af_m': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -4, ((0, 0, 0, ('9/8', '-3/8', '-5/8', '-1/8')), (0, 0, 1, ('27/4', '-9/4', '-15/4', '-3/4')))), (0, 0, 0, ((0, 0, 0, ('-9/4', '3/4', '5/4', '1/4')), (0, 0, 1, ('-9/2', '3/2', '5/2', '1/2')), (0, 0, 2, ('2', '-6', '6', '-2')), (0, 0, 3, ('-4', '12', '-12', '4')))), (0, 0, 4, ((0, 0, 0, ('9/8', '-3/8', '-5/8', '-1/8')), (0, 0, 1, ('-9/4', '3/4', '5/4', '1/4')))))},
    's_plus_p': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -1, ((0, 0, 0, ('3/2', '-1', '-1/2')),)), (0, 0, 3, ((0, 0, 0, ('-3/2', '1', '1/2')),)))},
    's_minus_p': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, 1, ((0, 0, 1, ('-2', '4', '-2')),)),)},
    'mu': {'a': 4, 'b': 4, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -10, ((0, 0, 0, ('5103/1024', '12393/1024', '1215/256', '-1971/256', '-4671/512', '-2097/512', '-221/256', '-15/256', '7/1024', '1/1024')), (0, 0, 1, ('-729/64', '729/64', '243/16', '-135/16', '-351/32', '-9/32', '47/16', '21/16', '15/64', '1/64')), (0, 0, 2, ('-729/64', '729/64', '243/16', '-135/16', '-351/32', '-9/32', '47/16', '21/16', '15/64', '1/64')))), (0, 0, -6, ((0, 0, 0, ('-15309/512', '-37179/512', '-3645/128', '5913/128', '14013/256', '6291/256', '663/128', '45/128', '-21/512', '-3/512')), (0, 0, 1, ('3645/64', '-3645/64', '-1215/16', '675/16', '1755/32', '45/32', '-235/16', '-105/16', '-75/64', '-5/64')), (0, 0, 2, ('1863/64', '-999/64', '-1053/16', '393/16', '1441/32', '-41/32', '-193/16', '-59/16', '-17/64', '1/64')))), (0, 0, -2, ((0, 0, 0, ('76545/1024', '185895/1024', '18225/256', '-29565/256', '-70065/512', '-31455/512', '-3315/256', '-225/256', '105/1024', '15/1024')), (0, 0, 1, ('-3645/32', '3645/32', '1215/8', '-675/8', '-1755/16', '-45/16', '235/8', '105/8', '75/32', '5/32')), (0, 0, 2, ('-81/32', '-1647/32', '891/8', '-111/8', '-1127/16', '127/16', '151/8', '13/8', '-41/32', '-7/32')), (0, 0, 3, ('-81/4', '297/4', '-81', '-3', '97/2', '-17/2', '-13', '1', '7/4', '1/4')), (0, 0, 4, ('-225/4', '777/4', '-169', '-107', '417/2', '-65/2', '-53', '9', '23/4', '1/4')))), (0, 0, 2, ((0, 0, 0, ('-25515/256', '-61965/256', '-6075/64', '9855/64', '23355/128', '10485/128', '1105/64', '75/64', '-35/256', '-5/256')), (0, 0, 1, ('3645/32', '-3645/32', '-1215/8', '675/8', '1755/16', '45/16', '-235/8', '-105/8', '-75/32', '-5/32')), (0, 0, 2, ('-1701/32', '4293/32', '-729/8', '-171/8', '813/16', '-213/16', '-109/8', '33/8', '99/32', '13/32')), (0, 0, 3, ('243/4', '-891/4', '243', '9', '-291/2', '51/2', '39', '-3', '-21/4', '-3/4')), (0, 0, 4, ('225/2', '-777/2', '338', '214', '-417', '65', '106', '-18', '-23/2', '-1/2')), (0, 0, 6, ('36', '-228', '592', '-784', '504', '-56', '-112', '48', '4', '-4')))), (0, 0, 6, ((0, 0, 0, ('76545/1024', '185895/1024', '18225/256', '-29565/256', '-70065/512', '-31455/512', '-3315/256', '-225/256', '105/1024', '15/1024')), (0, 0, 1, ('-3645/64', '3645/64', '1215/16', '-675/16', '-1755/32', '-45/32', '235/16', '105/16', '75/64', '5/64')), (0, 0, 2, ('3483/64', '-6939/64', '567/16', '453/16', '-499/32', '299/32', '67/16', '-79/16', '-157/64', '-19/64')), (0, 0, 3, ('-243/4', '891/4', '-243', '-9', '291/2', '-51/2', '-39', '3', '21/4', '3/4')), (0, 0, 4, ('-225/4', '777/4', '-169', '-107', '417/2', '-65/2', '-53', '9', '23/4', '1/4')), (0, 0, 6, ('-36', '228', '-592', '784', '-504', '56', '112', '-48', '-4', '4')))), (0, 0, 10, ((0, 0, 0, ('-15309/512', '-37179/512', '-3645/128', '5913/128', '14013/256', '6291/256', '663/128', '45/128', '-21/512', '-3/512')), (0, 0, 1, ('729/64', '-729/64', '-243/16', '135/16', '351/32', '9/32', '-47/16', '-21/16', '-15/64', '-1/64')), (0, 0, 2, ('-1053/64', '1917/64', '-81/16', '-147/16', '37/32', '-77/32', '-5/16', '25/16', '43/64', '5/64')), (0, 0, 3, ('81/4', '-297/4', '81', '3', '-97/2', '17/2', '13', '-1', '-7/4', '-1/4')))), (0, 0, 14, ((0, 0, 0, ('5103/1024', '12393/1024', '1215/256', '-1971/256', '-4671/512', '-2097/512', '-221/256', '-15/256', '7/1024', '1/1024')),)))},
    'mu1': {'a': 0, 'b': 0, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 0, ('-3', '-1')), (0, 0, 1, ('-3', '-1')))), (0, 0, 0, ((0, 0, 1, ('-3', '3')), (0, 0, 2, ('-2', '2')))), (0, 0, 2, ((0, 0, 0, ('3', '1')),)))},
    'mu2': {'a': 0, 'b': 0, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 0, ('-3', '-1')), (0, 0, 1, ('-3', '-1')))), (0, 0, 0, ((0, 0, 1, ('3', '-3')), (0, 0, 2, ('2', '-2')))), (0, 0, 2, ((0, 0, 0, ('3', '1')),)))},
    'mubar': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -7, ((0, 0, 0, ('81/32', '27/8', '27/16', '3/8', '1/32')),)), (0, 0, -3, ((0, 0, 0, ('-243/32', '-81/8', '-81/16', '-9/8', '-3/32')), (0, 0, 1, ('9/4', '-3', '-1/2', '1', '1/4')), (0, 0, 2, ('9/4', '-3', '-1/2', '1', '1/4')))), (0, 0, 1, ((0, 0, 0, ('243/32', '81/8', '81/16', '9/8', '3/32')), (0, 0, 1, ('-9/2', '6', '1', '-2', '-1/2')), (0, 0, 4, ('-4', '16', '-24', '16', '-4')))), (0, 0, 5, ((0, 0, 0, ('-81/32', '-27/8', '-27/16', '-3/8', '-1/32')), (0, 0, 1, ('9/4', '-3', '-1/2', '1', '1/4')), (0, 0, 2, ('-9/4', '3', '1/2', '-1', '-1/4')))))},
    'wbar_plus_qbar': {'a': 2, 'b': 2, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -4, ((0, 0, 1, ('9/2', '-6', '-1', '2', '1/2')), (0, 0, 2, ('27/2', '-18', '-3', '6', '3/2')))), (0, 0, 0, ((0, 0, 1, ('-9', '12', '2', '-4', '-1')), (0, 0, 2, ('-9', '12', '2', '-4', '-1')), (0, 0, 4, ('-8', '32', '-48', '32', '-8')))), (0, 0, 4, ((0, 0, 1, ('9/2', '-6', '-1', '2', '1/2')), (0, 0, 2, ('-9/2', '6', '1', '-2', '-1/2')))))},
    'wbar_minus_qbar': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -2, ((0, 0, 0, ('9', '6', '1')),)), (0, 0, 2, ((0, 0, 0, ('-9', '-6', '-1')),)))},
    'chi_m_at_m1': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -7, ((0, 0, 1, ('-81/16', '-27/16', '27/8', '21/8', '11/16', '1/16')),)), (0, 0, -3, ((0, 0, 1, ('135/16', '9/16', '-33/8', '-27/8', '-21/16', '-3/16')), (0, 0, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))), (0, 0, 1, ((0, 0, 1, ('-27/16', '63/16', '-15/8', '-9/8', '9/16', '3/16')), (0, 0, 2, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (0, 0, 3, ('-4', '8', '0', '-8', '4')), (0, 0, 4, ('-2', '10', '-20', '20', '-10', '2')))), (0, 0, 5, ((0, 0, 1, ('-27/16', '-45/16', '21/8', '15/8', '1/16', '-1/16')), (0, 0, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))))},
    'a_plus_d': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -1, ((0, 0, 1, ('3/4', '-1/2', '-1/4')), (0, 0, 2, ('-3', '2', '1')))), (0, 0, 3, ((0, 0, 1, ('-3/4', '1/2', '1/4')),)))},
    'a_minus_d': {'a': 1, 'b': 1, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -3, ((0, 0, 1, ('9/4', '3/2', '1/4')),)), (0, 0, 1, ((0, 0, 1, ('-9/4', '-3/2', '-1/4')), (0, 0, 2, ('-1', '2', '-1')))))},
    'vertex_p': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -5, ((0, 0, 0, ('-27/16', '-27/8', '-9/4', '-5/8', '-1/16')), (0, 0, 2, ('-81/8', '81/8', '27/4', '-15/4', '-21/8', '-3/8')))), (0, 0, -1, ((0, 0, 0, ('81/16', '81/8', '27/4', '15/8', '3/16')), (0, 0, 2, ('45/4', '-57/4', '-3/2', '3/2', '9/4', '3/4')), (0, 0, 3, ('-3', '11', '-14', '6', '1', '-1')), (0, 0, 4, ('6', '-22', '28', '-12', '-2', '2')))), (0, 0, 3, ((0, 0, 0, ('-81/16', '-81/8', '-27/4', '-15/8', '-3/16')), (0, 0, 2, ('-9/8', '33/8', '-21/4', '9/4', '3/8', '-3/8')), (0, 0, 3, ('3', '-11', '14', '-6', '-1', '1')))), (0, 0, 7, ((0, 0, 0, ('27/16', '27/8', '9/4', '5/8', '1/16')),)))},
    'vertex_m': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -7, ((0, 0, 1, ('-81/16', '-27/16', '27/8', '21/8', '11/16', '1/16')),)), (0, 0, -3, ((0, 0, 1, ('135/16', '9/16', '-33/8', '-27/8', '-21/16', '-3/16')), (0, 0, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))), (0, 0, 1, ((0, 0, 1, ('-27/16', '63/16', '-15/8', '-9/8', '9/16', '3/16')), (0, 0, 2, ('9/4', '-21/4', '5/2', '3/2', '-3/4', '-1/4')), (0, 0, 3, ('-4', '8', '0', '-8', '4')), (0, 0, 4, ('-2', '10', '-20', '20', '-10', '2')))), (0, 0, 5, ((0, 0, 1, ('-27/16', '-45/16', '21/8', '15/8', '1/16', '-1/16')), (0, 0, 2, ('-9/8', '21/8', '-5/4', '-3/4', '3/8', '1/8')))))},
    'xi_p_at_1': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -5, ((0, 0, 0, ('-27/4', '-27/2', '-9', '-5/2', '-1/4')), (0, 0, 2, ('-27/2', '27/2', '9', '-5', '-7/2', '-1/2')))), (0, 0, -1, ((0, 0, 0, ('27/2', '27', '18', '5', '1/2')), (0, 0, 1, ('6', '-4', '-8', '4', '2')), (0, 0, 2, ('3', '-11', '14', '-6', '-1', '1')))), (0, 0, 3, ((0, 0, 0, ('-27/4', '-27/2', '-9', '-5/2', '-1/4')), (0, 0, 1, ('-6', '4', '8', '-4', '-2')), (0, 0, 2, ('-3/2', '11/2', '-7', '3', '1/2', '-1/2')))))},
    'xi_m_at_m1': {'a': 2, 'b': 2, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -7, ((0, 0, 1, ('81/16', '27/16', '-27/8', '-21/8', '-11/16', '-1/16')),)), (0, 0, -3, ((0, 0, 0, ('-9/4', '-3/2', '2', '3/2', '1/4')), (0, 0, 1, ('117/16', '159/16', '-79/8', '-57/8', '-7/16', '3/16')), (0, 0, 3, ('9', '-21', '10', '6', '-3', '-1')))), (0, 0, 1, ((0, 0, 0, ('9/2', '3', '-4', '-3', '-1/2')), (0, 0, 1, ('-189/16', '-207/16', '111/8', '81/8', '15/16', '-3/16')), (0, 0, 2, ('-4', '8', '0', '-8', '4')), (0, 0, 3, ('-1', '5', '-10', '10', '-5', '1')))), (0, 0, 5, ((0, 0, 0, ('-9/4', '-3/2', '2', '3/2', '1/4')), (0, 0, 1, ('-9/16', '21/16', '-5/8', '-3/8', '3/16', '1/16')))))},
    'varsigma': {'a': 0, 'b': 0, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -3, ((0, 0, 1, ('9/2', '-3/2', '-5/2', '-1/2')),)), (0, 0, -1, ((0, 0, 0, ('-6', '-8', '-2')),)), (0, 0, 1, ((0, 0, 0, ('-2', '0', '2')), (0, 0, 1, ('-1/2', '3/2', '-3/2', '1/2')))))},
    'varsigma_sum': {'a': 0, 'b': 0, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -1, ((0, 0, 0, ('-12', '-16', '-4')),)),)},
    'varsigma_diff': {'a': 0, 'b': 0, 'qdeg': 1, 'vars': 'z', 'terms': ((0, 0, -3, ((0, 0, 1, ('9', '-3', '-5', '-1')),)), (0, 0, 1, ((0, 0, 0, ('-4', '0', '4')), (0, 0, 1, ('-1', '3', '-3', '1')))))},
    'varsigma_tilde': {'a': 0, 'b': 0, 'qdeg': 0, 'vars': 'z', 'terms': ((0, 0, -4, ((0, 0, 1, ('9', '6', '1')),)), (0, 0, 0, ((0, 0, 0, ('-4', '-4')), (0, 0, 1, ('-1', '2', '-1')))))},
}
