# grpdim: strong metric dimension of graphs on finite groups
